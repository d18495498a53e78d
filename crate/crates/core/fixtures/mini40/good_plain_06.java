void work6(int n) {
    int total = 6;
    for (int k = 0; k < n; k++) {
        total += k;
    }
    report(total);
}
