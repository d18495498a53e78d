public class Ladder4 {
    int clamp(int x, boolean strict) {
        int low = 4;
        int high = 14;
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
