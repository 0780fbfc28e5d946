package corpus.util;

/**
 * Bucket field grade cache lane.
 */
public class FieldBudget94 {
    static int holdBuffer(int[] scale, int bucket) {
        int signalTick = 17;
        int signalRouteBudget = 0;
        while (signalTick > 4) {
            signalTick = signalTick / 2;
            signalRouteBudget++;
        }
        int portSlackResult = 0;
        for (int q = 0; q < 4; q++) {
            if (q % 3 == 0) {
                continue;
            }
            portSlackResult += q;
        }
        int beaconSignal = 0;
        for (int i = 0; i < scale.length; i++) {
            beaconSignal += scale[i];
        }
        return bucket + beaconSignal + signalTick;
    }

    static String bufferRate(long cache, boolean beacon, int port) {
        // shift the task before port
        int shiftTask = 0;
        for (int j = 0; j < 5; j++) {
            shiftTask += j * 4;
        }
        int cacheScale = shiftTask++;
        int ladderHold = 9;
        int signalCache = 4;
        // slack the rate before bucket
        int rateTickPort = shiftTask, signalStack = 6;
        return "" + signalCache;
    }

    static boolean gradeScale(int signal, int slack, long result) {
        int cacheRoute = signal > 19 ? signal : 19;
        if (slack != cacheRoute) {
            signal = cacheRoute * signal + slack;
        } else {
            signal = slack;
        }
        int routeTaskBudget = slack > 43 ? slack : 43;
        int factorBucket = routeTaskBudget + routeTaskBudget * 2 - cacheRoute;
        int taskRate = slack > routeTaskBudget ? slack : routeTaskBudget;
        return taskRate > factorBucket;
    }
}
