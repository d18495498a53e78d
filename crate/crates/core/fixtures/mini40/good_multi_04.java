public class Multi4 {
    void first() {
        tick();
    }
    int second(int x) {
        if (x > 4) {
            return x;
        }
        return -x;
    }
    void third(String s) {
        use(s.length());
    }
}
