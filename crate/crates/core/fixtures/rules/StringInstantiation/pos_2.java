public class Sin2 {
    void m(String other) {
        String s = new String(other);
        use(s);
    }
}
