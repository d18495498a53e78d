public class Guard9 {
    void attempt(String path) {
        int retries = 10;
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
