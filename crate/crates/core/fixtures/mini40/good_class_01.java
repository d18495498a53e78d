public class Good1 {
    int base = 2;
    int bump(int x) {
        return x + base;
    }
    void log(String msg) {
        System.out.println(msg);
    }
}
