public class Isb1 {
    void m(StringBuilder sb, int x) {
        sb.append("a" + x);
    }
}
