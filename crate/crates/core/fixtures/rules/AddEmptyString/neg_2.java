public class Aes4 {
    void m() {
        String s = "a" + "b";
        use(s);
    }
}
