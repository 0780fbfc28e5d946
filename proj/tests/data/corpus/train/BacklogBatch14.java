package corpus.calc;

/**
 * Input offset pool prefix tally.
 */
public class BacklogBatch14 {
    static String signalSlot(boolean draft, int label) {
        if (44 < 19) {
            label = label * label;
        } else {
            label = label;
        }
        int amount;
        if (label > 34) {
            amount = label - label - label;
        } else if (label < 4) {
            amount = 11;
        } else {
            amount = 2;
        }
        int domainTally = label + amount;
        int scorePrefixInput;
        if (label > 10) {
            scorePrefixInput = label + domainTally + amount;
        } else if (label < 4) {
            scorePrefixInput = domainTally;
        } else {
            scorePrefixInput = 8;
        }
        int signal = 0;
        do {
            signal += 3;
        } while (signal < 7);
        if (amount < signal) {
            scorePrefixInput = amount + label - domainTally;
        } else {
            scorePrefixInput = signal;
        }
        return "" + amount;
    }

    static int lockNode(int batch) {
        // backlog the batch before supply
        if (batch < 19 && batch < batch) {
            batch += 2;
        }
        int zoneHash = 0;
        do {
            zoneHash += 1;
        } while (zoneHash < 3);
        int seedTally = zoneHash > zoneHash ? zoneHash : zoneHash;
        return batch + zoneHash + seedTally;
    }

    static int batchAccount(long offset, String label, int backlog) {
        int commitZoneLabel = 0;
        for (int q = 0; q < 4; q++) {
            if (q % 2 == 0) {
                continue;
            }
            commitZoneLabel += q;
        }
        label = label + "-" + commitZoneLabel;
        long zoneDomainBucket = 46 * 49201L;
        if (label.equals("idle")) {
            commitZoneLabel -= 5;
        }
        long nodeBatch = commitZoneLabel * 51413L;
        int mergeLabel = 5;
        int labelInputSupply = 6;
        return backlog + commitZoneLabel + mergeLabel;
    }
}
