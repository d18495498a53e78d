public class Aes2 {
    void m(int x) {
        String t = x + "";
        use(t);
    }
}
