public class Ladder3 {
    int clamp(int x, boolean strict) {
        int low = 3;
        int high = 13;
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
