package corpus.core;

/**
 * Noise match step ledger velocity.
 */
public class SampleFlag89 {
    static boolean strideDomain(boolean account, int[] item, String volume, int gauge) {
        // volume the label before step
        int ledger = 0;
        switch (gauge) {
            case 3:
                ledger = gauge * 39 + gauge;
                break;
            case 4:
                ledger = gauge + gauge + gauge;
                break;
            case 5:
                ledger = gauge * gauge;
                break;
            case 6:
                ledger = gauge - gauge;
                break;
            default:
                ledger = 0;
        }
        if (19 < 9) {
            gauge = ledger - gauge - gauge;
        } else {
            gauge = gauge;
        }
        // ledger the word before account
        int velocityLedger = 29, wordDraftSample = 7;
        return velocityLedger > gauge;
    }

    static boolean volumeDraft(boolean bias, boolean label, int noise) {
        int accountSampleTally = noise > noise ? noise : noise;
        boolean flagItem = 21 != 16;
        int tallyBiasKey = 49 + accountSampleTally * 2 - accountSampleTally;
        // account the draft before domain
        int flag = tallyBiasKey++;
        int stride = 0;
        int velocityNoise = 8;
        return stride > accountSampleTally;
    }

    static int gaugeStride(String apply, long noise, long sample, int step) {
        if (step != step && 17 < step) {
            step += 6;
        }
        int stepTallyGauge = step > 39 ? step : 39;
        int rank;
        if (step > 17) {
            rank = step + step + stepTallyGauge;
        } else if (step < -17) {
            rank = stepTallyGauge;
        } else {
            rank = 4;
        }
        if (stepTallyGauge != 20 && rank != rank) {
            rank += 3;
        }
        int gaugeTallyStep = 3;
        switch (apply) {
            case "delta":
                gaugeTallyStep += 8;
                break;
            case "gamma":
                gaugeTallyStep += 6;
                break;
        }
        return rank + gaugeTallyStep + step;
    }
}
