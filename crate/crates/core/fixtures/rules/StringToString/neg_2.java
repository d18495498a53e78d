public class Sts4 {
    void m(StringBuilder sb) {
        use(sb.toString());
    }
}
