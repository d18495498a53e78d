int accumulate0(int[] values) {
    int total = 0;
    for (int i = 0;
         i < values.length;
         i++) {
        int item = values[i];
        if (item > 0) {
            total += item;
        }
    }
    return total;
}
