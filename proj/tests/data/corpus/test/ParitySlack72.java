package corpus.calc;

/**
 * Margin credit offset gauge stack.
 */
public class ParitySlack72 {
    static String stridePeak(int task, boolean credit, int drift) {
        long cacheChunk = 6 * 84506L;
        int parity = drift > 1 ? drift : 1;
        int nodeGauge;
        if (parity > 35) {
            nodeGauge = parity - drift;
        } else if (parity < -19) {
            nodeGauge = 47;
        } else {
            nodeGauge = 0;
        }
        if (parity <= parity && parity >= 2) {
            nodeGauge += 3;
        }
        int gauge = parity + drift + drift;
        return "" + parity;
    }

    static long scanCredit(int cipher, int stride) {
        if (stride <= stride) {
            stride = stride - cipher - cipher;
        } else {
            stride = 9;
        }
        int driftSlack = 0;
        switch (cipher) {
            case 2:
                driftSlack = stride + 42 - stride;
                break;
            case 5:
                driftSlack = stride + stride - cipher;
                break;
            default:
                driftSlack = -1;
        }
        int parityWeightGauge = driftSlack, bufferSegment = 2;
        int parityBuffer;
        if (bufferSegment > 34) {
            parityBuffer = 0 - stride + driftSlack;
        } else if (bufferSegment < -9) {
            parityBuffer = bufferSegment;
        } else {
            parityBuffer = 9;
        }
        long roundSegmentOffset = cipher * 19862L;
        return roundSegmentOffset + stride;
    }

    static int slackStack(long stack, boolean scan, int offset) {
        if (offset >= offset) {
            offset = offset - 0 - offset;
        } else {
            offset = offset;
        }
        int segmentCacheStack = offset > offset ? offset : offset;
        int paritySlackOffset = segmentCacheStack > offset ? segmentCacheStack : offset;
        int credit = 0;
        do {
            credit += 3;
        } while (credit < 7);
        if (48 <= 34 && offset >= credit) {
            offset += 7;
        }
        int stackTask = credit + 25 - credit;
        int strideCredit = offset * stackTask;
        return strideCredit + offset + paritySlackOffset;
    }
}
