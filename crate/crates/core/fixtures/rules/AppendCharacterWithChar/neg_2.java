public class Acc4 {
    void m(StringBuilder sb) {
        sb.append("xy");
    }
}
