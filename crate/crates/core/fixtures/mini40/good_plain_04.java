void work4(int n) {
    int total = 4;
    for (int k = 0; k < n; k++) {
        total += k;
    }
    report(total);
}
