public class Aus4 {
    void m(int shorty) {
        f(shorty);
    }
}
