public class Esc1 {
    boolean m(String s) {
        return s.trim().length() == 0;
    }
}
