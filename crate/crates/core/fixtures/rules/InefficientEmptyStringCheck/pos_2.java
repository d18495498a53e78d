public class Esc2 {
    boolean m(String s) {
        return s.trim().isEmpty();
    }
}
