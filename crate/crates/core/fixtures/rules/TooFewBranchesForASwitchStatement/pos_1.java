public class Tfb1 {
    void m(int x) {
        switch (x) {
            case 1:
                f();
                break;
            default:
                g();
        }
    }
}
