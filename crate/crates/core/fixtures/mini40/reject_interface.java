interface Api {
    void call();
}
