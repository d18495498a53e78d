void m() { /* not closed
