public class Box<T> {
    void m() { }
}
