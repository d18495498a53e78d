public class Usv4 {
    void m(int x) {
        use(String.valueOf(x));
    }
}
