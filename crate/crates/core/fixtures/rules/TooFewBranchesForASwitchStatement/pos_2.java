public class Tfb2 {
    void m(int x) {
        switch (x) {
            case 1:
                f();
        }
    }
}
