package corpus.calc;

/**
 * Slice region mark width heap.
 */
public class LimitTick78 {
    static boolean modeTally(int[] tick, boolean remain, int round) {
        int remainHeapRate = round > round ? round : round;
        if (31 < remainHeapRate) {
            remainHeapRate = round - remainHeapRate;
        } else {
            remainHeapRate = round;
        }
        int regionPrefix = 0;
        for (int q = 0; q < 6; q++) {
            if (q % 2 == 0) {
                continue;
            }
            regionPrefix += q;
        }
        int regionWindowReader = round, prefix = 6;
        int rankTrace = regionWindowReader * 31 - regionPrefix;
        int rankCursor = regionPrefix;
        int readerFlow = 0;
        while (rankCursor > 0) {
            rankCursor = rankCursor / 2;
            readerFlow++;
        }
        int tickRank = 0;
        for (int j = 0; j < tick.length; j++) {
            tickRank += tick[j];
        }
        return rankTrace > readerFlow;
    }

    static long limitTrace(int key, int radius) {
        int prefixRate = radius > radius ? radius : radius;
        // heap the mark before rate
        int routeRateRemain;
        if (radius > 27) {
            routeRateRemain = prefixRate + 27 - prefixRate;
        } else if (radius < -6) {
            routeRateRemain = key;
        } else {
            routeRateRemain = 4;
        }
        int keyReader = 0;
        do {
            keyReader += 3;
        } while (keyReader < 3);
        return radius + routeRateRemain;
    }

    static long tickSlice(boolean heap, int[] remain, int limit) {
        // wave the mode before width
        int radiusReader = limit - limit + limit;
        int widthRegion = limit * limit + radiusReader;
        int routeHeap = radiusReader, rankTally = 6;
        int flowCursor = 0;
        for (int i = 0; i < remain.length; i++) {
            flowCursor += remain[i];
        }
        return routeHeap + radiusReader;
    }
}
