void probe(String s) {
    s.indexOf("a");
    keep(s);
}
