public class Ii4 {
    void m() {
        Object i = new java.math.BigInteger("3");
        use(i);
    }
}
