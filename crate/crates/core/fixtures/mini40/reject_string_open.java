void m() { String s = "oops; }
