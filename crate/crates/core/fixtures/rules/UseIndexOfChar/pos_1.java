public class Uic1 {
    void m(String s) {
        int i = s.indexOf("a");
        use(i);
    }
}
