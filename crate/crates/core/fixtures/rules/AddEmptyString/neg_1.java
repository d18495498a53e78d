public class Aes3 {
    void m() {
        use("");
    }
}
