public class Aal2 {
    void m(int[] a, int[] b, int n, int i) {
        while (i < n) {
            a[i] = b[i];
            i++;
        }
    }
}
