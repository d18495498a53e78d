public class Isd3 {
    String m() {
        StringBuilder sb = new StringBuilder(64);
        sb.append("0123456789");
        sb.append("0123456789");
        return done(sb);
    }
}
