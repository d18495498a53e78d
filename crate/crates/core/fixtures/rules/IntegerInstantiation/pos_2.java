public class Ii2 {
    void m(String s) {
        Integer i = new Integer(s);
        use(i);
    }
}
