public class Guard3 {
    void attempt(String path) {
        int retries = 4;
        try {
            open(path);
            retries--;
        } catch (Exception e) {
            report(e);
        } finally {
            close(path);
        }
        use(retries);
    }
}
