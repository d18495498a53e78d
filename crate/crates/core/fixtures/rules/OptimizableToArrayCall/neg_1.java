public class Otc3 {
    void m(java.util.List c, int n) {
        Object[] a = c.toArray(new String[n]);
        use(a);
    }
}
