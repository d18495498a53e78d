void probe() {
    use(new Integer(3));
    follow();
}
