public class Isb2 {
    void m(int id) {
        StringBuffer sb = new StringBuffer("id=" + id);
        use(sb);
    }
}
