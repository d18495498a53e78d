public class Multi3 {
    void first() {
        tick();
    }
    int second(int x) {
        if (x > 3) {
            return x;
        }
        return -x;
    }
    void third(String s) {
        use(s.length());
    }
}
