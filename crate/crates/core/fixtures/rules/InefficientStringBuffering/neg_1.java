public class Isb3 {
    void m(StringBuilder sb) {
        sb.append("a" + "b");
    }
}
