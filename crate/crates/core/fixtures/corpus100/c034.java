public class Ladder0 {
    int clamp(int x, boolean strict) {
        int low = 0;
        int high = 10;
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
