public class Rfi4 {
    void m() {
        int i = 0;
        f(i);
    }
}
