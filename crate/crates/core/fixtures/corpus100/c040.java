public class Ladder6 {
    int clamp(int x, boolean strict) {
        int low = 6;
        int high = 16;
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
