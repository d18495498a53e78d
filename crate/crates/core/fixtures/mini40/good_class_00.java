public class Good0 {
    int base = 1;
    int bump(int x) {
        return x + base;
    }
    void log(String msg) {
        System.out.println(msg);
    }
}
