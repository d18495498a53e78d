public class Acc2 {
    void m(StringBuffer buf) {
        buf.append("\n");
    }
}
