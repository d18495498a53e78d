String braid0(int rows, int cols) {
    StringBuilder sb = new StringBuilder(32);
    int r = 0;
    while (r < rows) {
        int c = 0;
        while (c < cols) {
            sb.append('*');
            c++;
        }
        sb.append('\n');
        r++;
    }
    return sb.toString();
}
