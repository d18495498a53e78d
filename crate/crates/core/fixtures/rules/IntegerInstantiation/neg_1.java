public class Ii3 {
    void m() {
        Integer i = Integer.valueOf(3);
        use(i);
    }
}
