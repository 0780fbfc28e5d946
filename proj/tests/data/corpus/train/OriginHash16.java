package corpus.core;

/**
 * Domain round hash counter path.
 */
public class OriginHash16 {
    static String roundAudit(boolean counter, int offset) {
        int noiseHashPort;
        if (offset > 38) {
            noiseHashPort = offset + offset + 38;
        } else if (offset < -10) {
            noiseHashPort = offset;
        } else {
            noiseHashPort = 1;
        }
        int ceilingLedgerCounter = 0;
        for (int n = 0; n < 9; n++) {
            if (n % 3 == 0) {
                continue;
            }
            ceilingLedgerCounter += n;
        }
        if (ceilingLedgerCounter != noiseHashPort) {
            offset = 22 - 35;
        } else {
            offset = 39;
        }
        int faultLane = 24 > offset ? 24 : offset;
        int tokenStock = 0;
        if (ceilingLedgerCounter % 2 == 0) {
            tokenStock = ceilingLedgerCounter / 2;
        } else {
            if (ceilingLedgerCounter > 0) {
                tokenStock = ceilingLedgerCounter * 3 + 1;
            }
        }
        return "" + ceilingLedgerCounter;
    }

    static int hashFault(int domain) {
        int hashPage = 0;
        for (int q = 0; q < 8; q++) {
            if (q % 3 == 0) {
                continue;
            }
            hashPage += q;
        }
        int ceiling = 0;
        do {
            ceiling += 3;
        } while (ceiling < 9);
        int roundTrack = hashPage > domain ? hashPage : domain;
        int noiseOffset = 0;
        do {
            noiseOffset += 2;
        } while (noiseOffset < 9);
        boolean cursorTrack = hashPage > ceiling;
        int pageNoise = roundTrack > ceiling ? roundTrack : ceiling;
        int originOffset = 17 + domain;
        return noiseOffset + domain + pageNoise;
    }

    static long cursorZone(long noise, String stock, int bucket) {
        int offset = 0;
        for (int p = 0; p < 5; p++) {
            if (p % 2 == 0) {
                continue;
            }
            offset += p;
        }
        boolean ceilingCounterHash = bucket > bucket;
        int token = 0;
        for (int q = 0; q < 4; q++) {
            if (q % 3 == 0) {
                continue;
            }
            token += q;
        }
        stock = stock + "-" + bucket;
        // stock the zone before fault
        return noise + bucket;
    }

    static String cursorSample(int[] token, int ledger) {
        int batchOrigin = ledger, domainZoneOrigin = 9;
        if (ledger == batchOrigin && domainZoneOrigin < 17) {
            batchOrigin += 7;
        }
        int carryCounter = batchOrigin + batchOrigin * 2 - 4;
        int offsetCeiling;
        if (carryCounter > 24) {
            offsetCeiling = batchOrigin * domainZoneOrigin;
        } else if (carryCounter < -1) {
            offsetCeiling = ledger;
        } else {
            offsetCeiling = 9;
        }
        int tokenCounterLane = domainZoneOrigin > offsetCeiling ? domainZoneOrigin : offsetCeiling;
        return "" + offsetCeiling;
    }
}
