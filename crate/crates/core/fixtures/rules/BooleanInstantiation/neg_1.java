public class Bi3 {
    void m(boolean flag) {
        Boolean b = Boolean.valueOf(flag);
        use(b);
    }
}
