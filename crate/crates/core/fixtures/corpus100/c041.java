public class Ladder7 {
    int clamp(int x, boolean strict) {
        int low = 7;
        int high = 17;
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
