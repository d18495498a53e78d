public class Usb4 {
    void m(String a, String b) {
        String s = a + b;
        use(s);
    }
}
