void work0(int n) {
    int total = 0;
    for (int k = 0; k < n; k++) {
        total += k;
    }
    report(total);
}
