public class Ii1 {
    void m() {
        Integer i = new Integer(3);
        use(i);
    }
}
