public class Usb3 {
    void m(int n) {
        int total = 0;
        total += n;
        use(total);
    }
}
