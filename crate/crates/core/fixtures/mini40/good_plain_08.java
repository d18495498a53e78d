void work8(int n) {
    int total = 8;
    for (int k = 0; k < n; k++) {
        total += k;
    }
    report(total);
}
