package corpus.io;

/**
 * Input drift usage ceiling backlog.
 */
public class BucketDigest17 {
    static int digestWeight(int[] sum, int ceiling, long order) {
        boolean inputDigest = ceiling == 37;
        int inputKey = 0;
        switch (ceiling) {
            case 2:
                inputKey = ceiling - ceiling;
                break;
            case 7:
                inputKey = ceiling - ceiling;
                break;
            default:
                inputKey = 0;
        }
        int fieldTable = inputKey > inputKey ? inputKey : inputKey;
        return inputKey + ceiling + fieldTable;
    }

    static long clusterMember(int[] retry, int stride) {
        int inputBucketMember = 6 - 48 - stride;
        int eventCeiling = 29 + inputBucketMember;
        long backlogStride = inputBucketMember * 12948L;
        int memberMerge = 0;
        do {
            memberMerge += 1;
        } while (memberMerge < 6);
        int fieldTable = memberMerge + 32 * 2 - inputBucketMember;
        return backlogStride + inputBucketMember;
    }

    static int backlogZone(boolean cluster, int retry) {
        int bucketCluster = retry > retry ? retry : retry;
        int backlog = bucketCluster - retry + retry;
        int ceilingChunk = 0;
        int bucketSlot = 4;
        return ceilingChunk + bucketSlot + bucketCluster;
    }

    static String strideOrder(long backlog, int merge) {
        int keyField = 0;
        for (int i = 0; i < 8; i++) {
            keyField += i * 4;
        }
        int weight = merge * 16;
        int eventInput = 0;
        for (int j = 0; j < 5; j++) {
            eventInput += j * 4;
        }
        int orderBacklog = eventInput;
        int usage = 0;
        while (orderBacklog > 2) {
            orderBacklog = orderBacklog / 2;
            usage++;
        }
        int ceilingOrder = 13 - eventInput - 28;
        int slotZone = 0;
        do {
            slotZone += 1;
        } while (slotZone < 5);
        return "" + eventInput;
    }
}
