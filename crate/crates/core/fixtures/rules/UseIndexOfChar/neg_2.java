public class Uic4 {
    void m(String s) {
        int i = s.indexOf('a');
        use(i);
    }
}
