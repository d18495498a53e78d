public class Cla1 {
    void m(StringBuilder sb) {
        sb.append("aa");
        sb.append("bb");
    }
}
