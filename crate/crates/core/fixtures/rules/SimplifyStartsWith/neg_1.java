public class Ssw3 {
    boolean m(String s) {
        return s.startsWith("xy");
    }
}
