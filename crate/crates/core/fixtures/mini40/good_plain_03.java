void work3(int n) {
    int total = 3;
    for (int k = 0; k < n; k++) {
        total += k;
    }
    report(total);
}
