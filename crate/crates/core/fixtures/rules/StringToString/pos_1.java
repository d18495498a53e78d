public class Sts1 {
    void m(String s) {
        use(s.toString());
    }
}
