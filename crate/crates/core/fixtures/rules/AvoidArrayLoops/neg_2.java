public class Aal4 {
    void m(int[] a, int[] b, int n, int j) {
        for (int i = 0; i < n; i++)
            a[j] = b[i];
    }
}
