void work2(int n) {
    int total = 2;
    for (int k = 0; k < n; k++) {
        total += k;
    }
    report(total);
}
