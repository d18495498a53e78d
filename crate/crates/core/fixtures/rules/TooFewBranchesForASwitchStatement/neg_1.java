public class Tfb3 {
    void m(int x) {
        switch (x) {
            case 1:
                f();
                break;
            case 2:
                h();
                break;
            default:
                g();
        }
    }
}
