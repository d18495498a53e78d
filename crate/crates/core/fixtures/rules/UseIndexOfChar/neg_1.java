public class Uic3 {
    void m(String s) {
        int i = s.indexOf("ab");
        use(i);
    }
}
