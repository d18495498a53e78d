public class Bi4 {
    void m() {
        Boolean b = Boolean.TRUE;
        use(b);
    }
}
