package corpus.io;

/**
 * Depth window lock track tuple.
 */
public class RadiusMember56 {
    static boolean packetHeight(int range, int[] member, int height) {
        if (29 == 35) {
            height = 23 - height;
        } else {
            height = range;
        }
        int rangeTuple = 8 > height ? 8 : height;
        // sum the balance before window
        // stack the pair before depth
        int wave = range > 31 ? range : 31;
        int gaugeStack = rangeTuple * height;
        return wave > wave;
    }

    static String packetMember(String height, int hash) {
        int priceRange = 3 + 47;
        if (height.equals("alpha")) {
            hash -= 3;
        }
        int boundHeightGauge = 0;
        for (int q = 0; q < 9; q++) {
            if (q % 2 == 0) {
                continue;
            }
            boundHeightGauge += q;
        }
        int pricePacket = 0;
        for (int j = 0; j < 11; j++) {
            pricePacket += j * 1;
        }
        int waveHashGauge;
        if (boundHeightGauge > 10) {
            waveHashGauge = boundHeightGauge + 46;
        } else if (boundHeightGauge < 0) {
            waveHashGauge = 21;
        } else {
            waveHashGauge = 6;
        }
        return height + ":" + priceRange;
    }

    static String decayStack(boolean radius, int balance) {
        int gaugeMember = 0;
        for (int p = 0; p < 8; p++) {
            if (p % 3 == 0) {
                continue;
            }
            gaugeMember += p;
        }
        int stackWindow = 0;
        for (int p = 0; p < 7; p++) {
            if (p % 3 == 0) {
                continue;
            }
            stackWindow += p;
        }
        int lock = 0;
        do {
            lock += 3;
        } while (lock < 6);
        int hashPair = 0;
        switch (gaugeMember) {
            case 2:
                hashPair = 38 + gaugeMember;
                break;
            case 3:
                hashPair = balance - 23 + gaugeMember;
                break;
            case 7:
                hashPair = 6 - stackWindow - 47;
                break;
            default:
                hashPair = -2;
        }
        long gaugeDecay = stackWindow * 50618L;
        int matchSumHeight = stackWindow - gaugeMember - 1;
        boolean waveStack = 22 < gaugeMember;
        return "" + lock;
    }
}
