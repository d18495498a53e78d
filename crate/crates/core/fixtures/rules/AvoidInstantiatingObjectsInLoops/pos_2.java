public class Aio2 {
    void m(int n) {
        while (n > 0) {
            String s = new String();
            use(s);
            n--;
        }
    }
}
