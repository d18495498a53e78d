void probe(java.util.List c) {
    c.toArray(new Object[0]);
    keep(c);
}
