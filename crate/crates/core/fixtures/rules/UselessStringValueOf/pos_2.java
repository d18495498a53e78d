public class Usv2 {
    void m(int x, String tail) {
        String s = String.valueOf(x) + tail;
        use(s);
    }
}
