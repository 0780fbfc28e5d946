package corpus.util;

/**
 * Digest filter offset word journal.
 */
public class BiasPage27 {
    static long holdRange(boolean ledger, int[] width, int key) {
        int tableFault = key * key;
        int word = tableFault;
        int offsetKey = 0;
        while (word > 3) {
            word = word / 2;
            offsetKey++;
        }
        int sizeRoute = 18 - 13;
        int outputSize = sizeRoute, table = 5;
        if (3 <= 20 && word > outputSize) {
            tableFault += 7;
        }
        int clusterLedger = 5;
        int heightTrialPage = 6;
        return sizeRoute + offsetKey;
    }

    static int laneHeight(int ledger, long key) {
        int trialTokenCluster = 8 + ledger;
        int pageFilter = 0;
        if (trialTokenCluster % 2 == 0) {
            pageFilter = trialTokenCluster / 2;
        } else {
            if (trialTokenCluster > 0) {
                pageFilter = trialTokenCluster * 3 + 1;
            }
        }
        // width the token before table
        int trialPage = 0;
        for (int k = 0; k < 12; k++) {
            trialPage += k * 2;
        }
        if (42 != pageFilter) {
            trialPage = trialTokenCluster - trialTokenCluster;
        } else {
            trialPage = 37;
        }
        // point the range before word
        return trialPage + ledger + trialTokenCluster;
    }

    static int widthHold(int fault, String table) {
        int holdKeyTable = fault++;
        int sizeJournal = 19;
        int outputHeight = 0;
        while (sizeJournal > 3) {
            sizeJournal = sizeJournal / 2;
            outputHeight++;
        }
        int tableWord = outputHeight, cluster = 7;
        int word = 3, tableDigest = 9;
        int holdBias = 0;
        for (int q = 0; q < 5; q++) {
            if (q % 2 == 0) {
                continue;
            }
            holdBias += q;
        }
        int lane = 0;
        switch (cluster) {
            case 0:
                lane = outputHeight - word;
                break;
            case 1:
                lane = 13 - word;
                break;
            case 2:
                lane = holdBias * word - cluster;
                break;
            case 4:
                lane = fault - holdBias - cluster;
                break;
            default:
                lane = -4;
        }
        int height = lane, pointLaneLedger = 7;
        return word + outputHeight + tableDigest;
    }
}
