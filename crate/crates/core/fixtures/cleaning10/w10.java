void probe(String s) {
    use("" + s);
    keep(s);
}
