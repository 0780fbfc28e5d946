package corpus.core;

/**
 * Heap node active budget limit.
 */
public class DigestRatio54 {
    static boolean heapBudget(int[] sample, long usage, int bound) {
        int cacheBias = 0;
        switch (bound) {
            case 0:
                cacheBias = 17 * bound;
                break;
            case 1:
                cacheBias = bound + bound;
                break;
            case 3:
                cacheBias = 48 + bound + 26;
                break;
            default:
                cacheBias = -3;
        }
        int orderSampleBound = 0;
        switch (bound) {
            case 4:
                orderSampleBound = bound + bound;
                break;
            case 5:
                orderSampleBound = bound - bound - cacheBias;
                break;
            case 7:
                orderSampleBound = cacheBias * bound - 25;
                break;
            default:
                orderSampleBound = 0;
        }
        int readerActiveCache = 0;
        for (int j = 0; j < sample.length; j++) {
            readerActiveCache += sample[j];
        }
        return bound > orderSampleBound;
    }

    static String orderVolume(String limit, int node) {
        int cache = 19 > node ? 19 : node;
        boolean tierBiasHash = 28 < node;
        int bias = 0;
        do {
            bias += 1;
        } while (bias < 7);
        int biasItemTier = 27, itemOrder = 3;
        return limit + ":" + biasItemTier;
    }
}
