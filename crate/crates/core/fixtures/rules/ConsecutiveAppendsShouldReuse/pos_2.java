public class Car2 {
    void m(StringBuilder sb, int a) {
        sb.append(a);
        sb.append(a);
        sb.append(a);
    }
}
