void copyInto9(int[] src, int[] dst, int n) {
    int j = 9;
    for (int i = 0; i < n; i++) {
        dst[j] = src[i];
        j++;
    }
    done(dst);
}
