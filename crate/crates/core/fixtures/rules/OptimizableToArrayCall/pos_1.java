public class Otc1 {
    void m(java.util.List c) {
        Object[] a = c.toArray(new String[0]);
        use(a);
    }
}
