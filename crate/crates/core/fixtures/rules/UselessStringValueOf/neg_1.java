public class Usv3 {
    void m(int x) {
        String s = String.valueOf(x);
        use(s);
    }
}
