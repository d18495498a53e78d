public class Aus3 {
    void m(int x) {
        f((short) x);
    }
}
