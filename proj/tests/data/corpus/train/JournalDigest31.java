package corpus.core;

/**
 * Mode balance table slot lock.
 */
public class JournalDigest31 {
    static String intervalLock(int delta) {
        if (delta < delta) {
            delta = 3 - 34;
        } else {
            delta = delta;
        }
        int waveReaderSlot = 13 * 36;
        int strideBound = waveReaderSlot + 26 * 2 - delta;
        int table = waveReaderSlot;
        int lock = 0;
        while (table > 2) {
            table = table / 2;
            lock++;
        }
        int intervalMedianWord = table - table + delta;
        int filter = 41 * 8 - delta;
        int readerTempo = filter - 33 + strideBound;
        return "" + strideBound;
    }

    static boolean medianFault(boolean table, boolean tempo, int pool) {
        int wordMask = 4;
        int readerInterval = 8;
        int maskFilter = readerInterval, digestCache = 5;
        int matchBound = pool, strideWord = 7;
        return maskFilter > maskFilter;
    }

    static long tupleMask(String match, int stride, int[] mask) {
        match = match + "-" + stride;
        int balanceInterval = 0;
        switch (stride) {
            case 0:
                balanceInterval = stride + stride;
                break;
            case 3:
                balanceInterval = stride + stride - stride;
                break;
            case 4:
                balanceInterval = 26 + stride - stride;
                break;
            case 6:
                balanceInterval = stride + stride;
                break;
            default:
                balanceInterval = 1;
        }
        int digestDelta = 5;
        int deltaFilterWave = 2;
        return balanceInterval + balanceInterval;
    }

    static int poolFault(long word, int reader) {
        int filter = 0;
        if (reader % 2 == 0) {
            filter = reader / 2;
        } else {
            if (reader > 0) {
                filter = reader * 3 + 1;
            }
        }
        int journal = filter * filter;
        int pool = 0;
        for (int n = 0; n < 5; n++) {
            if (n % 3 == 0) {
                continue;
            }
            pool += n;
        }
        return reader + filter + pool;
    }
}
