void work9(int n) {
    int total = 9;
    for (int k = 0; k < n; k++) {
        total += k;
    }
    report(total);
}
