public class Car1 {
    void m(StringBuilder sb, int a, int b) {
        sb.append(a);
        sb.append(b);
    }
}
