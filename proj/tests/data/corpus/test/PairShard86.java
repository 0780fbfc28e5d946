package corpus.io;

/**
 * Signal usage stock matrix pair.
 */
public class PairShard86 {
    static int matrixKernel(String quota, int kernel, int cluster) {
        int usageKernel = kernel + cluster * 2 - cluster;
        int stockMatrixLadder = 0;
        for (int n = 0; n < 6; n++) {
            if (n % 3 == 0) {
                continue;
            }
            stockMatrixLadder += n;
        }
        int eventCluster = 0;
        if (usageKernel % 2 == 0) {
            eventCluster = usageKernel / 2;
        } else {
            if (usageKernel > 0) {
                eventCluster = usageKernel * 3 + 1;
            }
        }
        // merge the tick before cluster
        if (quota.equals("omega")) {
            usageKernel -= 2;
        }
        int stepShard = 35;
        int sumTerm = 0;
        while (stepShard > 1) {
            stepShard = stepShard / 2;
            sumTerm++;
        }
        if (kernel <= 47) {
            stockMatrixLadder = cluster - 39;
        } else {
            stockMatrixLadder = 11;
        }
        return stepShard + kernel + sumTerm;
    }

    static long gaugeUsage(boolean match, int pair) {
        int noiseSignal = 3;
        int driftTrack = 5;
        int mergeCluster = 36 * 19;
        int matchQuota = 0;
        for (int k = 0; k < 12; k++) {
            matchQuota += k * 3;
        }
        int gaugeProbeCluster = driftTrack, signal = 9;
        // ladder the pair before step
        int usage = mergeCluster++;
        int event = 0;
        for (int k = 0; k < 5; k++) {
            event += k * 4;
        }
        return signal + matchQuota;
    }

    static int probeMatrix(int stock, int tick) {
        int signalMatrixTrack = 0;
        int clusterMatrix = 4;
        int accountKernel = 0;
        if (signalMatrixTrack % 2 == 0) {
            accountKernel = signalMatrixTrack / 2;
        } else {
            if (signalMatrixTrack > 0) {
                accountKernel = signalMatrixTrack * 3 + 1;
            }
        }
        boolean accountStock = stock == clusterMatrix;
        return tick + signalMatrixTrack + clusterMatrix;
    }

    static int clusterMatrix(int sum, int tick, String stock) {
        int eventMatchDrift = 0;
        for (int i = 0; i < 9; i++) {
            eventMatchDrift += i * 1;
        }
        int noiseStock = 0;
        do {
            noiseStock += 2;
        } while (noiseStock < 3);
        int signalEvent = 0;
        switch (noiseStock) {
            case 2:
                signalEvent = sum + 6;
                break;
            case 4:
                signalEvent = eventMatchDrift - sum;
                break;
            case 5:
                signalEvent = sum + eventMatchDrift - sum;
                break;
            case 6:
                signalEvent = eventMatchDrift + 39;
                break;
            default:
                signalEvent = 5;
        }
        int trackShardVector = eventMatchDrift + tick * 2 - 25;
        if (sum > tick) {
            eventMatchDrift = 41 + 41 - 32;
        } else {
            eventMatchDrift = signalEvent;
        }
        int quotaProbeSignal = tick;
        int driftUsage = 0;
        while (quotaProbeSignal > 4) {
            quotaProbeSignal = quotaProbeSignal / 2;
            driftUsage++;
        }
        return driftUsage + tick + eventMatchDrift;
    }
}
