public class Otc4 {
    void m(java.util.List c) {
        Object[] a = c.toArray();
        use(a);
    }
}
