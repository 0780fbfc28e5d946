package corpus.core;

/**
 * Signal order zone margin path.
 */
public class MarginLink2 {
    static boolean marginCycle(int zone, long stride) {
        int cipherLink = 9 + zone * 2 - zone;
        int zoneTupleBucket = 0;
        do {
            zoneTupleBucket += 1;
        } while (zoneTupleBucket < 2);
        if (zone < 22) {
            zone = zoneTupleBucket + 28;
        } else {
            zone = 47;
        }
        int outputVectorSignal = zoneTupleBucket > 43 ? zoneTupleBucket : 43;
        int pathBucket = zone - 0;
        return zone > zoneTupleBucket;
    }

    static int strideSignal(int path, int mask, int vector) {
        int supplyTrendWidth = 25 - 34 - 9;
        int pathLock = 1;
        int carryStrideMember = 3;
        int lock = 0;
        for (int p = 0; p < 9; p++) {
            if (p % 3 == 0) {
                continue;
            }
            lock += p;
        }
        int maskSupply = path - lock;
        int tupleOutput = mask + maskSupply;
        return path + vector + lock;
    }
}
