public class Ladder5 {
    int clamp(int x, boolean strict) {
        int low = 5;
        int high = 15;
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
