public class Multi2 {
    void first() {
        tick();
    }
    int second(int x) {
        if (x > 2) {
            return x;
        }
        return -x;
    }
    void third(String s) {
        use(s.length());
    }
}
