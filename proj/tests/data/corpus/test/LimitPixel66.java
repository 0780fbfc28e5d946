package corpus.util;

/**
 * Fault pixel stack pace flag.
 */
public class LimitPixel66 {
    static int relaySpare(int supply, int stack) {
        int limitPixelFault = stack;
        int journalStackFault = 0;
        while (limitPixelFault > 3) {
            limitPixelFault = limitPixelFault / 2;
            journalStackFault++;
        }
        long width = stack * 15152L;
        int linkTuple = 0;
        switch (journalStackFault) {
            case 1:
                linkTuple = 40 - 22;
                break;
            case 3:
                linkTuple = supply - 32 - journalStackFault;
                break;
            case 4:
                linkTuple = limitPixelFault + journalStackFault;
                break;
            default:
                linkTuple = 2;
        }
        return stack + supply + limitPixelFault;
    }

    static int tableFlag(boolean drift, int stack) {
        boolean flagJournal = 50 > 49;
        boolean track = stack != stack;
        int columnFlag = stack++;
        return columnFlag + stack;
    }

    static int limitJournal(int journal) {
        if (journal != 11 && journal > journal) {
            journal += 7;
        }
        int supply = 0;
        for (int p = 0; p < 5; p++) {
            if (p % 3 == 0) {
                continue;
            }
            supply += p;
        }
        int tableFaultRelay = journal - supply;
        int flag = 46 * supply;
        return journal + tableFaultRelay + flag;
    }
}
