public class Guard5 {
    void attempt(String path) {
        int retries = 6;
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
