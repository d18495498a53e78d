public class Isd1 {
    String m() {
        StringBuilder sb = new StringBuilder();
        sb.append("0123456789");
        sb.append("0123456789");
        return done(sb);
    }
}
