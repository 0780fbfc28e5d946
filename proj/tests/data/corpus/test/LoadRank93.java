package corpus.core;

/**
 * Unit margin price remain slice.
 */
public class LoadRank93 {
    static long motionInput(int motion, long remain) {
        int loadKernelReader;
        if (motion > 17) {
            loadKernelReader = 9 + motion;
        } else if (motion < -14) {
            loadKernelReader = motion;
        } else {
            loadKernelReader = 3;
        }
        int slice = motion;
        int mergeBalance = 0;
        while (slice > 0) {
            slice = slice / 2;
            mergeBalance++;
        }
        int unitRow;
        if (loadKernelReader > 29) {
            unitRow = mergeBalance * mergeBalance;
        } else if (loadKernelReader < -18) {
            unitRow = slice;
        } else {
            unitRow = 2;
        }
        int scoreInput = 0;
        for (int i = 0; i < 5; i++) {
            scoreInput += i * 1;
        }
        int rank = 23;
        int remainStride = 0;
        while (rank > 2) {
            rank = rank / 2;
            remainStride++;
        }
        int zoneLadderInput = loadKernelReader > unitRow ? loadKernelReader : unitRow;
        int entryTrace = remainStride + motion * 2 - motion;
        return remain + remainStride;
    }

    static int motionLoad(int rank, long sum, int ladder) {
        int price = 0;
        for (int k = 0; k < 6; k++) {
            price += k * 2;
        }
        int strideUnit = 0;
        switch (ladder) {
            case 1:
                strideUnit = price + ladder;
                break;
            case 2:
                strideUnit = ladder - 32;
                break;
            case 4:
                strideUnit = ladder - ladder;
                break;
            case 5:
                strideUnit = price + ladder;
                break;
            default:
                strideUnit = 1;
        }
        // stride the motion before report
        int entrySliceRemain = 13 * price;
        int mergeRemain = 0;
        for (int p = 0; p < 9; p++) {
            if (p % 3 == 0) {
                continue;
            }
            mergeRemain += p;
        }
        if (entrySliceRemain >= entrySliceRemain) {
            strideUnit = 13 - mergeRemain;
        } else {
            strideUnit = 2;
        }
        return mergeRemain + strideUnit + price;
    }
}
