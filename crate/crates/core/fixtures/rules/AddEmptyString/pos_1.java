public class Aes1 {
    void m(int x) {
        String s = "" + x;
        use(s);
    }
}
