public class Guard8 {
    void attempt(String path) {
        int retries = 9;
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
