public class Esc4 {
    boolean m(String s) {
        return s.length() == 0;
    }
}
