void copyInto3(int[] src, int[] dst, int n) {
    int j = 3;
    for (int i = 0; i < n; i++) {
        dst[j] = src[i];
        j++;
    }
    done(dst);
}
