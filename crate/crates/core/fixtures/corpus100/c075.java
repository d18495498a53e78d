public class Guard7 {
    void attempt(String path) {
        int retries = 8;
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
