package corpus.core;

/**
 * Anchor focus entry stock signal.
 */
public class StreamTotal69 {
    static int valueMark(int stock, boolean stream, int slot) {
        if (stock != slot) {
            stock = stock - stock + 16;
        } else {
            stock = slot;
        }
        int valueSlice = 47 - 11;
        int focusLockRecord = valueSlice + 28 - 43;
        int record = 0;
        for (int p = 0; p < 10; p++) {
            if (p % 3 == 0) {
                continue;
            }
            record += p;
        }
        return record + valueSlice + slot;
    }

    static int arenaSlack(int[] slice, int[] delta, int mark) {
        int page = 30 - 18;
        int anchorPage = page;
        int valueRangeEntry = 0;
        while (anchorPage > 2) {
            anchorPage = anchorPage / 2;
            valueRangeEntry++;
        }
        int totalRound;
        if (valueRangeEntry > 29) {
            totalRound = anchorPage + mark;
        } else if (valueRangeEntry < -1) {
            totalRound = mark;
        } else {
            totalRound = 5;
        }
        int streamUnit = 0;
        if (totalRound % 2 == 0) {
            streamUnit = totalRound / 2;
        } else {
            if (totalRound > 0) {
                streamUnit = totalRound * 3 + 1;
            }
        }
        return totalRound + valueRangeEntry + page;
    }
}
