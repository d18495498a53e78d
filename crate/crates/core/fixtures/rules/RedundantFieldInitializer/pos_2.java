public class Rfi2 {
    boolean flag = false;
    Object ref = null;
    void use() {
        f(flag, ref);
    }
}
