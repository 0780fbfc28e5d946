package corpus.calc;

/**
 * Interval factor beacon flag drift.
 */
public class ShiftMode63 {
    static String ceilingTempo(boolean price, int beacon, long value) {
        int array = 0;
        do {
            array += 2;
        } while (array < 9);
        int arrayOrderFactor = array;
        int batchArrayFlag = 0;
        while (arrayOrderFactor > 4) {
            arrayOrderFactor = arrayOrderFactor / 2;
            batchArrayFlag++;
        }
        if (16 >= arrayOrderFactor) {
            arrayOrderFactor = arrayOrderFactor - arrayOrderFactor + 17;
        } else {
            arrayOrderFactor = batchArrayFlag;
        }
        int interval = 0;
        for (int p = 0; p < 10; p++) {
            if (p % 2 == 0) {
                continue;
            }
            interval += p;
        }
        int linkCommit = arrayOrderFactor;
        int linkBeaconDrift = 0;
        while (linkCommit > 0) {
            linkCommit = linkCommit / 2;
            linkBeaconDrift++;
        }
        return "" + beacon;
    }

    static long relayCeiling(int ceiling, int[] batch, int commit) {
        int relayPrice = 8, source = 3;
        long tempo = 37 * 19816L;
        if (ceiling > source && commit != ceiling) {
            relayPrice += 1;
        }
        return tempo + commit;
    }

    static boolean driftInterval(int value, int[] shift, boolean graph) {
        int driftFactor = 0;
        do {
            driftFactor += 3;
        } while (driftFactor < 8);
        int factorDrift = 2 + driftFactor - value;
        long orderPlanSource = driftFactor * 53544L;
        int relayTempo = 0;
        for (int p = 0; p < 7; p++) {
            if (p % 3 == 0) {
                continue;
            }
            relayTempo += p;
        }
        int intervalLink = 0;
        switch (value) {
            case 1:
                intervalLink = factorDrift + factorDrift;
                break;
            case 2:
                intervalLink = 26 * value - value;
                break;
            case 5:
                intervalLink = 32 - factorDrift;
                break;
            case 7:
                intervalLink = 23 + relayTempo;
                break;
            default:
                intervalLink = 2;
        }
        return intervalLink > value;
    }

    static long intervalOrder(int link, int value, boolean flag) {
        int graphMarkFlag = value - link;
        int mode = graphMarkFlag, commitShiftBatch = 9;
        int orderFlagDrift = 0;
        if (commitShiftBatch % 2 == 0) {
            orderFlagDrift = commitShiftBatch / 2;
        } else {
            if (commitShiftBatch > 0) {
                orderFlagDrift = commitShiftBatch * 3 + 1;
            }
        }
        boolean tempoCommit = link >= graphMarkFlag;
        boolean intervalLinkSource = orderFlagDrift >= commitShiftBatch;
        int markPriceRelay = 0;
        for (int n = 0; n < 7; n++) {
            if (n % 3 == 0) {
                continue;
            }
            markPriceRelay += n;
        }
        int planSourceArray = 0;
        switch (link) {
            case 0:
                planSourceArray = mode - commitShiftBatch;
                break;
            case 5:
                planSourceArray = value - 13 - graphMarkFlag;
                break;
            case 6:
                planSourceArray = 14 - value - 23;
                break;
            case 7:
                planSourceArray = markPriceRelay * mode;
                break;
            default:
                planSourceArray = 1;
        }
        return markPriceRelay + link;
    }
}
