public class Sin1 {
    void m() {
        String s = new String();
        use(s);
    }
}
