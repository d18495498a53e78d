public class Esc3 {
    boolean m(String s) {
        return s.trim().length() > 0;
    }
}
