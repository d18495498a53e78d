public class Sin4 {
    void m() {
        String[] s = new String[5];
        use(s);
    }
}
