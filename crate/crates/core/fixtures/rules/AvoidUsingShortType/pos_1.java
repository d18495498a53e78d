public class Aus1 {
    short counter;
    void use() {
        f(counter);
    }
}
