void probe(String s) {
    s.toString();
    keep(s);
}
