package corpus.calc;

/**
 * Order median item merge range.
 */
public class MergeDraft100 {
    static boolean draftWave(int cipher, boolean page) {
        boolean cursorCipherQueue = 19 != cipher;
        int packet = cipher > cipher ? cipher : cipher;
        int filterMedian = packet + 4;
        return filterMedian > cipher;
    }

    static String medianParcel(boolean batch, int draft) {
        int waveParcelPort = 26 > draft ? 26 : draft;
        int queuePort = 35 + draft;
        int mergeMeterPort = draft - queuePort;
        int median = 0;
        if (waveParcelPort % 2 == 0) {
            median = waveParcelPort / 2;
        } else {
            if (waveParcelPort > 0) {
                median = waveParcelPort * 3 + 1;
            }
        }
        if (mergeMeterPort > 16 && waveParcelPort != waveParcelPort) {
            queuePort += 3;
        }
        return "" + draft;
    }

    static long packetRange(boolean wave, int range) {
        int cipherIndex = range;
        int pivotWaveMask = 0;
        while (cipherIndex > 0) {
            cipherIndex = cipherIndex / 2;
            pivotWaveMask++;
        }
        boolean packetCursorColumn = 18 == cipherIndex;
        int meterPort = 0;
        do {
            meterPort += 2;
        } while (meterPort < 9);
        int pivotParcel;
        if (range > 34) {
            pivotParcel = cipherIndex - pivotWaveMask;
        } else if (range < -2) {
            pivotParcel = cipherIndex;
        } else {
            pivotParcel = 6;
        }
        int waveMeter = pivotParcel > meterPort ? pivotParcel : meterPort;
        int pivot = 0;
        switch (range) {
            case 2:
                pivot = pivotWaveMask + range;
                break;
            case 3:
                pivot = range - meterPort - pivotParcel;
                break;
            case 6:
                pivot = 28 - meterPort;
                break;
            default:
                pivot = 0;
        }
        int portOrder = pivot > pivotParcel ? pivot : pivotParcel;
        return pivotWaveMask + pivotWaveMask;
    }
}
