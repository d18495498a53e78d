public class Multi5 {
    void first() {
        tick();
    }
    int second(int x) {
        if (x > 5) {
            return x;
        }
        return -x;
    }
    void third(String s) {
        use(s.length());
    }
}
