int accumulate2(int[] values) {
    int total = 0;
    for (int i = 0;
         i < values.length;
         i++) {
        int item = values[i];
        if (item > 2) {
            total += item;
        }
    }
    return total;
}
