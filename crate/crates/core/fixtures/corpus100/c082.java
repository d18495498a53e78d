void pipeline4(int seed) {
    int a = seed + 4;
    int b = a * 2;
    int c = b - a;
    int d = c + b;
    emit(a,
         b,
         c,
         d);
}
