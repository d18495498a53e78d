public class Acc3 {
    void m(StringBuilder sb) {
        sb.append('x');
    }
}
