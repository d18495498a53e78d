public class Sin3 {
    void m(byte[] bytes) {
        String s = new String(bytes);
        use(s);
    }
}
