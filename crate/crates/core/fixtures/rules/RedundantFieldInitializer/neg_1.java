public class Rfi3 {
    int i = 1;
    void use() {
        f(i);
    }
}
