public class Isd2 {
    String m() {
        StringBuffer sb = new StringBuffer(4);
        sb.append("hello!");
        return done(sb);
    }
}
