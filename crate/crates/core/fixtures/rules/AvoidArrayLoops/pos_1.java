public class Aal1 {
    void m(int[] a, int[] b, int n) {
        for (int i = 0; i < n; i++) {
            a[i] = b[i];
        }
    }
}
