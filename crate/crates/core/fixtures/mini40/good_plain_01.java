void work1(int n) {
    int total = 1;
    for (int k = 0; k < n; k++) {
        total += k;
    }
    report(total);
}
