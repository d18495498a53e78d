public class Aio1 {
    void m(int n) {
        for (int i = 0; i < n; i++) {
            Object o = new Object();
            use(o);
        }
    }
}
