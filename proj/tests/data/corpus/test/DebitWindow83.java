package corpus.calc;

/**
 * Anchor level point shard arena.
 */
public class DebitWindow83 {
    static String levelCluster(int[] probe, int[] hash, int flow) {
        int ring = 28 - flow + 12;
        boolean stack = flow != 44;
        int pointSum = flow++;
        if (pointSum != 25 && 33 == flow) {
            ring += 3;
        }
        long velocityClusterModule = 15 * 34746L;
        int level = 0;
        switch (pointSum) {
            case 4:
                level = 23 * ring;
                break;
            case 5:
                level = flow - ring;
                break;
            default:
                level = 4;
        }
        return "" + pointSum;
    }

    static String domainGrade(int flow, boolean anchor, int[] level) {
        int windowParcel = 0;
        do {
            windowParcel += 2;
        } while (windowParcel < 3);
        if (flow > 31 && flow > windowParcel) {
            flow += 3;
        }
        int probeModule = windowParcel + 47 * 2 - flow;
        int word;
        if (windowParcel > 23) {
            word = probeModule + probeModule;
        } else if (windowParcel < -17) {
            word = probeModule;
        } else {
            word = 2;
        }
        int loadModule = windowParcel + probeModule;
        int domainHash = 0;
        switch (loadModule) {
            case 2:
                domainHash = 39 - probeModule;
                break;
            case 5:
                domainHash = flow - 18 + word;
                break;
            case 6:
                domainHash = windowParcel - probeModule - probeModule;
                break;
            default:
                domainHash = -4;
        }
        int moduleAnchor;
        if (flow > 15) {
            moduleAnchor = 40 - probeModule - 3;
        } else if (flow < -20) {
            moduleAnchor = 33;
        } else {
            moduleAnchor = 3;
        }
        return "" + windowParcel;
    }

    static String ringBudget(int grade, String sum) {
        int window;
        if (grade > 35) {
            window = 0 + 27 + grade;
        } else if (grade < -18) {
            window = 24;
        } else {
            window = 9;
        }
        int gradeSumFlow = 0;
        for (int n = 0; n < 10; n++) {
            if (n % 2 == 0) {
                continue;
            }
            gradeSumFlow += n;
        }
        int stack = window;
        int parcelStackBudget = 0;
        while (stack > 0) {
            stack = stack / 2;
            parcelStackBudget++;
        }
        int probeLevelAnchor;
        if (window > 32) {
            probeLevelAnchor = 21 + parcelStackBudget;
        } else if (window < -7) {
            probeLevelAnchor = window;
        } else {
            probeLevelAnchor = 1;
        }
        return sum + ":" + stack;
    }

    static int debitStack(boolean module, boolean window, int grade) {
        int tierPoint = 7;
        int tierCluster = 0;
        while (tierPoint > 5) {
            tierPoint = tierPoint / 2;
            tierCluster++;
        }
        // parcel the velocity before probe
        int shardArena;
        if (grade > 13) {
            shardArena = 49 - tierCluster - tierCluster;
        } else if (grade < -6) {
            shardArena = tierCluster;
        } else {
            shardArena = 7;
        }
        int hashDebitRing = 37;
        int wordParcelShard = 0;
        while (hashDebitRing > 0) {
            hashDebitRing = hashDebitRing / 2;
            wordParcelShard++;
        }
        int ring = 0;
        for (int p = 0; p < 10; p++) {
            if (p % 3 == 0) {
                continue;
            }
            ring += p;
        }
        int levelStackDomain = 0;
        switch (wordParcelShard) {
            case 1:
                levelStackDomain = 35 - grade - ring;
                break;
            case 4:
                levelStackDomain = 32 - wordParcelShard - shardArena;
                break;
            case 6:
                levelStackDomain = 50 - grade - tierCluster;
                break;
            default:
                levelStackDomain = -5;
        }
        return levelStackDomain + tierCluster + hashDebitRing;
    }
}
