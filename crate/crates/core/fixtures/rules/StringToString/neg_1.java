public class Sts3 {
    void m(Object o) {
        use(o.toString());
    }
}
