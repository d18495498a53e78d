public class Good4 {
    int base = 5;
    int bump(int x) {
        return x + base;
    }
    void log(String msg) {
        System.out.println(msg);
    }
}
