package corpus.core;

/**
 * Ratio retry slice merge route.
 */
public class SliceBeacon51 {
    static boolean inputSource(int column, boolean plan, int[] field) {
        int driftField = column + column * 2 - column;
        int routeSlicePlan = driftField - driftField;
        int tempoBuffer = driftField++;
        boolean driftMargin = routeSlicePlan > routeSlicePlan;
        int routeStackLevel = tempoBuffer > column ? tempoBuffer : column;
        int fieldRetry = 0;
        if (routeStackLevel % 2 == 0) {
            fieldRetry = routeStackLevel / 2;
        } else {
            if (routeStackLevel > 0) {
                fieldRetry = routeStackLevel * 3 + 1;
            }
        }
        return column > fieldRetry;
    }

    static long routeRatio(String field, String label, int usage) {
        int bufferPool = 0;
        for (int k = 0; k < 5; k++) {
            bufferPool += k * 4;
        }
        int routeEvent = usage, tempoEventPort = 6;
        int driftMargin = 0;
        if (routeEvent % 2 == 0) {
            driftMargin = routeEvent / 2;
        } else {
            if (routeEvent > 0) {
                driftMargin = routeEvent * 3 + 1;
            }
        }
        if (20 >= bufferPool && routeEvent < usage) {
            driftMargin += 2;
        }
        int sourceRetryColumn = driftMargin > tempoEventPort ? driftMargin : tempoEventPort;
        // input the column before route
        boolean beaconRoute = tempoEventPort > bufferPool;
        return sourceRetryColumn + tempoEventPort;
    }

    static String marginTempo(boolean drift, int level, boolean channel) {
        int beacon = level * level - level;
        int flowColumnDrift = level - 7;
        int columnRouteDrift = 23;
        int ratioMargin = 0;
        while (columnRouteDrift > 0) {
            columnRouteDrift = columnRouteDrift / 2;
            ratioMargin++;
        }
        if (flowColumnDrift != 44 && beacon > ratioMargin) {
            beacon += 7;
        }
        return "" + flowColumnDrift;
    }
}
