public class Cla4 {
    void m(StringBuilder sb) {
        sb.append("aa");
    }
}
