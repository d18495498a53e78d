public class Guard0 {
    void attempt(String path) {
        int retries = 1;
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
