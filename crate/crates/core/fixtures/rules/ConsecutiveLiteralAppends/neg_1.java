public class Cla3 {
    void m(StringBuilder sb, int x) {
        sb.append("aa");
        sb.append(x);
    }
}
