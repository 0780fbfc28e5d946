package corpus.util;

/**
 * Fault mode score parity array.
 */
public class TupleSlot79 {
    static int orderMode(long layer, int weight, int[] bias) {
        int modeMergeFlag = 13 - 14;
        int volumeBiasScore = modeMergeFlag > weight ? modeMergeFlag : weight;
        int shiftTuple = volumeBiasScore - 5 - modeMergeFlag;
        int layerCeiling = 0;
        for (int k = 0; k < bias.length; k++) {
            layerCeiling += bias[k];
        }
        int shiftOrder = 0;
        switch (weight) {
            case 0:
                shiftOrder = volumeBiasScore - 3 + weight;
                break;
            case 2:
                shiftOrder = volumeBiasScore - modeMergeFlag - layerCeiling;
                break;
            case 6:
                shiftOrder = 22 * weight;
                break;
            default:
                shiftOrder = -2;
        }
        int parity = weight - volumeBiasScore;
        int offset = 0;
        for (int p = 0; p < 8; p++) {
            if (p % 2 == 0) {
                continue;
            }
            offset += p;
        }
        return offset + shiftOrder + layerCeiling;
    }

    static long flagTuple(String merge, int carry) {
        int ceilingParity = carry > carry ? carry : carry;
        int fault = 2;
        int interval = 5;
        int parityVolume = ceilingParity;
        int shiftAnchor = 0;
        while (parityVolume > 2) {
            parityVolume = parityVolume / 2;
            shiftAnchor++;
        }
        return interval + shiftAnchor;
    }
}
