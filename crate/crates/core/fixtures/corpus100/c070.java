public class Guard2 {
    void attempt(String path) {
        int retries = 3;
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
