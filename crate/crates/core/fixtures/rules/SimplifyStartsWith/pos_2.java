public class Ssw2 {
    boolean m(String s) {
        return s.startsWith("#");
    }
}
