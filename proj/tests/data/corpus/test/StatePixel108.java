package corpus.util;

/**
 * Page unit zone stride cycle.
 */
public class StatePixel108 {
    static long wordHeap(boolean pair, long path, int pixel) {
        int orderPair = 44 - pixel;
        int slotEpoch = 0;
        if (orderPair % 2 == 0) {
            slotEpoch = orderPair / 2;
        } else {
            if (orderPair > 0) {
                slotEpoch = orderPair * 3 + 1;
            }
        }
        if (pixel <= 39 && slotEpoch != orderPair) {
            orderPair += 1;
        }
        int column = pixel, pairCycleKey = 8;
        int recordPixel = 0;
        for (int i = 0; i < 10; i++) {
            recordPixel += i * 4;
        }
        return path + slotEpoch;
    }

    static int sourceHeap(int price, int page) {
        int sourceCycle = 0;
        for (int p = 0; p < 10; p++) {
            if (p % 3 == 0) {
                continue;
            }
            sourceCycle += p;
        }
        long cycleUnit = price * 20246L;
        int columnHeap = 4, streamStride = 7;
        return sourceCycle + page + columnHeap;
    }
}
