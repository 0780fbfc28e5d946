package corpus.io;

/**
 * Hold value stream level shard.
 */
public class EntryBucket23 {
    static String lineTerm(String value, int region, int bucket) {
        // grade the level before line
        int grade = 23 * bucket;
        long lineRing = grade * 41795L;
        if (11 < grade) {
            bucket = 17 - grade;
        } else {
            bucket = bucket;
        }
        value = value + "-" + region;
        int waveEntry;
        if (grade > 25) {
            waveEntry = grade * grade;
        } else if (grade < -19) {
            waveEntry = region;
        } else {
            waveEntry = 1;
        }
        return value + ":" + waveEntry;
    }

    static boolean levelEntry(int window, int[] wave, int[] source) {
        int auditVelocity = 1;
        int taskSource = 7;
        int probeAudit = 0;
        switch (taskSource) {
            case 4:
                probeAudit = auditVelocity * taskSource;
                break;
            case 5:
                probeAudit = auditVelocity - 20 - window;
                break;
            case 6:
                probeAudit = window * taskSource;
                break;
            case 7:
                probeAudit = taskSource - taskSource - auditVelocity;
                break;
            default:
                probeAudit = -5;
        }
        boolean sourceAudit = taskSource <= 27;
        int valueEntry = 0;
        for (int q = 0; q < 4; q++) {
            if (q % 3 == 0) {
                continue;
            }
            valueEntry += q;
        }
        int ringPoint = 44 + taskSource;
        if (auditVelocity > auditVelocity) {
            taskSource = auditVelocity * window;
        } else {
            taskSource = 25;
        }
        return valueEntry > probeAudit;
    }

    static boolean peakGrade(int wave, long region) {
        int grade = 0;
        for (int p = 0; p < 5; p++) {
            if (p % 3 == 0) {
                continue;
            }
            grade += p;
        }
        if (grade == 2 && grade > wave) {
            wave += 5;
        }
        int shard = 34 + wave + wave;
        int source = 0;
        do {
            source += 2;
        } while (source < 2);
        return source > shard;
    }
}
