public class Good2 {
    int base = 3;
    int bump(int x) {
        return x + base;
    }
    void log(String msg) {
        System.out.println(msg);
    }
}
