public class Cla2 {
    void m(StringBuilder sb) {
        sb.append("aa");
        sb.append('c');
        sb.append(42);
    }
}
