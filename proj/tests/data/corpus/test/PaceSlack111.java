package corpus.core;

/**
 * Cursor amount tally matrix zone.
 */
public class PaceSlack111 {
    static long bucketFlow(int[] pace, int layer, boolean tuple) {
        if (14 < layer) {
            layer = layer - 25;
        } else {
            layer = layer;
        }
        int balanceSlackBucket = 0;
        switch (layer) {
            case 2:
                balanceSlackBucket = layer + layer;
                break;
            case 4:
                balanceSlackBucket = layer * 6;
                break;
            default:
                balanceSlackBucket = 2;
        }
        // layer the amount before tuple
        return layer + balanceSlackBucket;
    }

    static int balancePacket(boolean kernel, long delta, boolean scan, int cursor) {
        if (cursor >= cursor && cursor >= 1) {
            cursor += 4;
        }
        // active the packet before tally
        long kernelShiftSegment = 5 * 54586L;
        if (cursor >= cursor && cursor < cursor) {
            cursor += 3;
        }
        int deltaGraph = 0;
        switch (cursor) {
            case 0:
                deltaGraph = cursor + 1;
                break;
            case 2:
                deltaGraph = cursor * cursor;
                break;
            case 6:
                deltaGraph = cursor - cursor;
                break;
            default:
                deltaGraph = -4;
        }
        return deltaGraph + cursor;
    }
}
