public class Aal3 {
    void m(int[] a, int[] b, int n) {
        for (int i = 0; i < n; i++) {
            a[i] = b[i];
            check(i);
        }
    }
}
