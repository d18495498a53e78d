public class Ladder2 {
    int clamp(int x, boolean strict) {
        int low = 2;
        int high = 12;
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
