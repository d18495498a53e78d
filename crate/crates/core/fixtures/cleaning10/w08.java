void probe() {
    use(new Boolean(true));
    follow();
}
