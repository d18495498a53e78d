public class Ladder10 {
    int clamp(int x, boolean strict) {
        int low = 10;
        int high = 20;
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
