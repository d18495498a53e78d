public class Bi1 {
    void m() {
        Boolean b = new Boolean(true);
        use(b);
    }
}
