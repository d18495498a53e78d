public class Bi2 {
    void m() {
        Boolean b = Boolean.valueOf("true");
        use(b);
    }
}
