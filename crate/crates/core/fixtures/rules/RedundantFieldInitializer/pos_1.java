public class Rfi1 {
    int i = 0;
    void use() {
        f(i);
    }
}
