public class Usv1 {
    void m(int x) {
        String s = "v=" + String.valueOf(x);
        use(s);
    }
}
