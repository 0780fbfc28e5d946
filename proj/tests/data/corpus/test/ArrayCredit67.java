package corpus.io;

/**
 * Filter tally record hold cipher.
 */
public class ArrayCredit67 {
    static String filterRecord(int path, int[] array, String hold) {
        int flow = 0;
        for (int j = 0; j < array.length; j++) {
            flow += array[j];
        }
        int trace = flow + path * 2 - path;
        if (hold.equals("beta")) {
            path -= 5;
        }
        return hold + ":" + trace;
    }

    static boolean hashMask(boolean decay, int ring, int anchor) {
        if (ring != 39 && anchor > anchor) {
            ring += 6;
        }
        int filterMargin = 0;
        if (ring % 2 == 0) {
            filterMargin = ring / 2;
        } else {
            if (ring > 0) {
                filterMargin = ring * 3 + 1;
            }
        }
        int beacon;
        if (filterMargin > 12) {
            beacon = 33 - anchor - ring;
        } else if (filterMargin < -19) {
            beacon = anchor;
        } else {
            beacon = 9;
        }
        int domainHash = 6;
        int usageTrack = 0;
        int record = domainHash - 17 - anchor;
        return filterMargin > usageTrack;
    }
}
