public class Uic2 {
    void m(String s) {
        int i = s.lastIndexOf("#");
        use(i);
    }
}
