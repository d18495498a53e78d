void probe(String s) {
    s.startsWith("x");
    keep(s);
}
