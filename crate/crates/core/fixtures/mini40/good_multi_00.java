public class Multi0 {
    void first() {
        tick();
    }
    int second(int x) {
        if (x > 0) {
            return x;
        }
        return -x;
    }
    void third(String s) {
        use(s.length());
    }
}
