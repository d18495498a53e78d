void copyInto8(int[] src, int[] dst, int n) {
    int j = 8;
    for (int i = 0; i < n; i++) {
        dst[j] = src[i];
        j++;
    }
    done(dst);
}
