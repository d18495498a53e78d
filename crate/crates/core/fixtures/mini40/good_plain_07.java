void work7(int n) {
    int total = 7;
    for (int k = 0; k < n; k++) {
        total += k;
    }
    report(total);
}
