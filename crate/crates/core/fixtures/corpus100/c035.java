public class Ladder1 {
    int clamp(int x, boolean strict) {
        int low = 1;
        int high = 11;
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
