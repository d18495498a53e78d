public class Guard4 {
    void attempt(String path) {
        int retries = 5;
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
