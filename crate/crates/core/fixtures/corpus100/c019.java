void copyInto7(int[] src, int[] dst, int n) {
    int j = 7;
    for (int i = 0; i < n; i++) {
        dst[j] = src[i];
        j++;
    }
    done(dst);
}
