public class Good3 {
    int base = 4;
    int bump(int x) {
        return x + base;
    }
    void log(String msg) {
        System.out.println(msg);
    }
}
