public class Ladder11 {
    int clamp(int x, boolean strict) {
        int low = 11;
        int high = 21;
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
