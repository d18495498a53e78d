public class Ssw1 {
    boolean m(String s) {
        return s.startsWith("x");
    }
}
