public class Tfb4 {
    void m(int x) {
        switch (x) {
            case 1:
                f();
                break;
            case 2:
                h();
                break;
            case 3:
                k();
                break;
            default:
                g();
        }
    }
}
