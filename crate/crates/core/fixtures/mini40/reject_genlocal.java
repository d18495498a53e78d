void m() {
    java.util.List<String> xs = null;
    use(xs);
}
