public class Guard1 {
    void attempt(String path) {
        int retries = 2;
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
