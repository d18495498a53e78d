public class Usb2 {
    String acc;
    void add(String v) {
        acc += v;
    }
}
