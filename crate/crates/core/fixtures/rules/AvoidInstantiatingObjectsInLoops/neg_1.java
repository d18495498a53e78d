public class Aio3 {
    void m(int n) {
        Object o = new Object();
        for (int i = 0; i < n; i++) {
            use(o);
        }
    }
}
