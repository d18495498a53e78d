void work5(int n) {
    int total = 5;
    for (int k = 0; k < n; k++) {
        total += k;
    }
    report(total);
}
