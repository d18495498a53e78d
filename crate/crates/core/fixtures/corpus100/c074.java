public class Guard6 {
    void attempt(String path) {
        int retries = 7;
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
