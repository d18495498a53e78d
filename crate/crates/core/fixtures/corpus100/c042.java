public class Ladder8 {
    int clamp(int x, boolean strict) {
        int low = 8;
        int high = 18;
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
