public class Acc1 {
    void m(StringBuilder sb) {
        sb.append("x");
    }
}
