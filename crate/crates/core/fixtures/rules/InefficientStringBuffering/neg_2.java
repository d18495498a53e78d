public class Isb4 {
    void m(StringBuilder sb, int x) {
        sb.append(x);
    }
}
