void probe(String s) {
    s.lastIndexOf("z");
    keep(s);
}
