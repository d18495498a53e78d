public class Multi1 {
    void first() {
        tick();
    }
    int second(int x) {
        if (x > 1) {
            return x;
        }
        return -x;
    }
    void third(String s) {
        use(s.length());
    }
}
