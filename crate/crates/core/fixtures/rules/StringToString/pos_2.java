public class Sts2 {
    void m() {
        use("lit".toString());
    }
}
