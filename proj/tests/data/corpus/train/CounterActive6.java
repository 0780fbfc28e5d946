package corpus.io;

/**
 * Pace beacon amount bucket lane.
 */
public class CounterActive6 {
    static int counterMark(int retry) {
        int bufferSpan = retry + 9 * 2 - retry;
        int counterAdjust = 0;
        do {
            counterAdjust += 2;
        } while (counterAdjust < 5);
        int amountRemain = retry++;
        if (retry >= bufferSpan && retry <= amountRemain) {
            retry += 6;
        }
        long cipherState = amountRemain * 30899L;
        return retry + counterAdjust + amountRemain;
    }

    static int cipherActive(int[] counter, int[] input, int lane) {
        int windowState;
        if (lane > 22) {
            windowState = lane + lane + 47;
        } else if (lane < -20) {
            windowState = 28;
        } else {
            windowState = 1;
        }
        // lane the state before span
        int motionBeacon = windowState++;
        long motionLane = lane * 46658L;
        // remain the draft before buffer
        int stateRetry = 5 + windowState - windowState;
        return stateRetry + lane + motionBeacon;
    }

    static String marginAdjust(int remain, int step) {
        int motionDepth = 0;
        if (remain % 2 == 0) {
            motionDepth = remain / 2;
        } else {
            if (remain > 0) {
                motionDepth = remain * 3 + 1;
            }
        }
        // beacon the span before cipher
        int draftMotion = step++;
        boolean beacon = remain <= draftMotion;
        return "" + draftMotion;
    }
}
