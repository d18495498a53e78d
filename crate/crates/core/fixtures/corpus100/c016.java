void copyInto4(int[] src, int[] dst, int n) {
    int j = 4;
    for (int i = 0; i < n; i++) {
        dst[j] = src[i];
        j++;
    }
    done(dst);
}
