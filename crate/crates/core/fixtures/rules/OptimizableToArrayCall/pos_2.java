public class Otc2 {
    void m(java.util.Collection c) {
        Object[] a = c.toArray(new Object[0]);
        use(a);
    }
}
