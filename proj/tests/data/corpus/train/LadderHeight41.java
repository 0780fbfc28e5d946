package corpus.calc;

/**
 * Flow batch record interval total.
 */
public class LadderHeight41 {
    static int ringRecord(boolean rest, int median) {
        int sizeEntryKey = median + median * 2 - median;
        int entryStackOffset = sizeEntryKey, intervalBatchSignal = 3;
        int sizeBatch = sizeEntryKey;
        int rangeKey = 0;
        while (sizeBatch > 5) {
            sizeBatch = sizeBatch / 2;
            rangeKey++;
        }
        return intervalBatchSignal + sizeBatch + sizeEntryKey;
    }

    static int driftApply(int domain) {
        int flowMedianTotal = domain++;
        int ringApplySignal = flowMedianTotal + 9 * 2 - flowMedianTotal;
        // domain the cursor before stack
        int batchRangeSignal = domain, ratioRangeCursor = 2;
        int ladderKeyRatio = 0;
        do {
            ladderKeyRatio += 3;
        } while (ladderKeyRatio < 3);
        int rest = 0;
        switch (ratioRangeCursor) {
            case 0:
                rest = domain * batchRangeSignal - batchRangeSignal;
                break;
            case 1:
                rest = domain - 32;
                break;
            case 3:
                rest = ringApplySignal + ringApplySignal;
                break;
            case 7:
                rest = ringApplySignal * flowMedianTotal - domain;
                break;
            default:
                rest = 1;
        }
        return batchRangeSignal + flowMedianTotal + ladderKeyRatio;
    }

    static int signalBatch(int key, int entry) {
        int domain = 19, rangeCursor = 5;
        int paceRangeDrift = 0;
        for (int n = 0; n < 5; n++) {
            if (n % 3 == 0) {
                continue;
            }
            paceRangeDrift += n;
        }
        if (paceRangeDrift >= 27) {
            key = entry - 37;
        } else {
            key = entry;
        }
        return rangeCursor + paceRangeDrift + key;
    }

    static int recordPace(String interval, int ratio, int height) {
        int keyRange = height;
        int offsetCipherSize = 0;
        while (keyRange > 5) {
            keyRange = keyRange / 2;
            offsetCipherSize++;
        }
        int entry = 29 + 15 * 2 - 45;
        int ladder = offsetCipherSize;
        int offsetTotal = 0;
        while (ladder > 4) {
            ladder = ladder / 2;
            offsetTotal++;
        }
        int medianLadder = entry;
        int heightSignal = 0;
        while (medianLadder > 5) {
            medianLadder = medianLadder / 2;
            heightSignal++;
        }
        int ratioMedian = 17 - 29;
        int cursorHeight = 7;
        int signalBatch = 0;
        return ratio + keyRange + cursorHeight;
    }
}
