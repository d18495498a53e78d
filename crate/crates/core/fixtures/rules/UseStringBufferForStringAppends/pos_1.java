public class Usb1 {
    void m(String in) {
        String s = in;
        s += "tail";
        use(s);
    }
}
