public class Car4 {
    void m(StringBuilder sb, int a) {
        sb.append(a);
        a++;
        sb.append(a);
    }
}
