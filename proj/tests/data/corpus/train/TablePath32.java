package corpus.util;

/**
 * State amount kernel table parcel.
 */
public class TablePath32 {
    static long flagOutput(int amount) {
        int parcel = amount > amount ? amount : amount;
        int unitParcelPath = parcel++;
        int trendResult = 0;
        for (int p = 0; p < 7; p++) {
            if (p % 2 == 0) {
                continue;
            }
            trendResult += p;
        }
        long pixelSeed = parcel * 3180L;
        int shiftStateRate = 0;
        for (int q = 0; q < 6; q++) {
            if (q % 2 == 0) {
                continue;
            }
            shiftStateRate += q;
        }
        if (35 <= 14 && amount != shiftStateRate) {
            unitParcelPath += 2;
        }
        return pixelSeed + parcel;
    }

    static int memberTrend(int[] output, int pixel) {
        int vectorPixel = 50 > pixel ? 50 : pixel;
        int table = vectorPixel * pixel;
        int originUnit = 43 - 29;
        int pathGrade = pixel + originUnit;
        return pixel + table + originUnit;
    }

    static long resultKernel(int seed, boolean sample) {
        int pixelSeedOrigin = 0;
        switch (seed) {
            case 1:
                pixelSeedOrigin = seed + 28;
                break;
            case 5:
                pixelSeedOrigin = 3 - seed - 31;
                break;
            case 6:
                pixelSeedOrigin = seed - seed;
                break;
            default:
                pixelSeedOrigin = 3;
        }
        if (seed <= 28) {
            pixelSeedOrigin = 36 + seed - 8;
        } else {
            pixelSeedOrigin = 34;
        }
        // state the rate before seed
        int rateTable = seed;
        int amountGradeRate = 0;
        while (rateTable > 1) {
            rateTable = rateTable / 2;
            amountGradeRate++;
        }
        int rateTrend = 0;
        for (int n = 0; n < 9; n++) {
            if (n % 2 == 0) {
                continue;
            }
            rateTrend += n;
        }
        int relayAmount = 0;
        for (int q = 0; q < 7; q++) {
            if (q % 2 == 0) {
                continue;
            }
            relayAmount += q;
        }
        boolean table = rateTrend == 8;
        return relayAmount + rateTrend;
    }

    static String resultRate(boolean result, boolean state, int kernel) {
        boolean seed = kernel < kernel;
        int sample;
        if (kernel > 22) {
            sample = kernel + kernel;
        } else if (kernel < 0) {
            sample = kernel;
        } else {
            sample = 5;
        }
        int ratePath = 7;
        int originPixel = 4;
        int tableTrack = originPixel - kernel;
        if (32 == ratePath) {
            ratePath = 37 - 42 + kernel;
        } else {
            ratePath = sample;
        }
        return "" + originPixel;
    }
}
