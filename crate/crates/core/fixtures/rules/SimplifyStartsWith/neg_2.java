public class Ssw4 {
    boolean m(String s) {
        return s.endsWith("x");
    }
}
