public class Ladder9 {
    int clamp(int x, boolean strict) {
        int low = 9;
        int high = 19;
        if (x < low
                || (strict
                    && x == low)) {
            return low;
        } else if (x > high) {
            return high;
        } else {
            return x;
        }
    }
}
