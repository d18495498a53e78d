public class Car3 {
    void m(StringBuilder x, StringBuilder y, int a) {
        x.append(a);
        y.append(a);
    }
}
