void copyInto0(int[] src, int[] dst, int n) {
    int j = 0;
    for (int i = 0; i < n; i++) {
        dst[j] = src[i];
        j++;
    }
    done(dst);
}
