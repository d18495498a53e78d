public class Aus2 {
    void m(short p) {
        short k = 1;
        f(p, k);
    }
}
