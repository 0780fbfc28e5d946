package corpus.core;

/**
 * Graph pace grain interval median.
 */
public class MedianWidth87 {
    static String ledgerMask(long slack, int member, long tally) {
        int median = 5;
        int mask = 0;
        boolean maskMember = median >= member;
        int intervalTally = 0;
        do {
            intervalTally += 1;
        } while (intervalTally < 7);
        int stageLoad = member, array = 3;
        int intervalMemberUsage = array + intervalTally;
        return "" + member;
    }

    static boolean columnWidth(int[] parity, int pace) {
        int grainGraph = pace * 11;
        if (20 > pace && grainGraph == 3) {
            grainGraph += 7;
        }
        int array = 50 > 36 ? 50 : 36;
        int intervalPool = 0;
        if (grainGraph % 2 == 0) {
            intervalPool = grainGraph / 2;
        } else {
            if (grainGraph > 0) {
                intervalPool = grainGraph * 3 + 1;
            }
        }
        int slackWindowArray = 5;
        int stepTallyMedian = 8;
        return intervalPool > pace;
    }

    static long medianWindow(long graph, long array, int window) {
        // ledger the member before amount
        int graphColumnMask = 0;
        for (int p = 0; p < 8; p++) {
            if (p % 3 == 0) {
                continue;
            }
            graphColumnMask += p;
        }
        int paceAmount = 2 + window * 2 - window;
        return array + paceAmount;
    }

    static int slackBacklog(long usage, int slack, int window) {
        // spare the tally before member
        if (slack == slack) {
            slack = 37 * slack - slack;
        } else {
            slack = window;
        }
        int stage = window > window ? window : window;
        return window + slack + stage;
    }
}
