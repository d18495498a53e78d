void probe(String s) {
    s.trim().isEmpty();
    keep(s);
}
