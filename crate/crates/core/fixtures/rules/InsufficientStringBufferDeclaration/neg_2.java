public class Isd4 {
    String m(String chunk) {
        StringBuilder sb = new StringBuilder();
        sb.append(chunk);
        sb.append(chunk);
        sb.append(chunk);
        return done(sb);
    }
}
