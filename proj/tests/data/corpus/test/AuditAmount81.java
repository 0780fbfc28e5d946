package corpus.util;

/**
 * Hold heap stride weight window.
 */
public class AuditAmount81 {
    static int graphStride(long field, int audit) {
        int windowMergeGraph = audit - audit;
        if (8 < audit && audit >= audit) {
            windowMergeGraph += 2;
        }
        long windowGraphMerge = 28 * 97839L;
        long rankDraft = windowMergeGraph * 6457L;
        return audit + windowMergeGraph;
    }

    static boolean graphLoad(String stride, int graph) {
        int windowGraph = 0;
        if (graph % 2 == 0) {
            windowGraph = graph / 2;
        } else {
            if (graph > 0) {
                windowGraph = graph * 3 + 1;
            }
        }
        int linkStrideGraph = windowGraph;
        int fieldAudit = 0;
        while (linkStrideGraph > 4) {
            linkStrideGraph = linkStrideGraph / 2;
            fieldAudit++;
        }
        int layerHeap = 0;
        for (int p = 0; p < 4; p++) {
            if (p % 2 == 0) {
                continue;
            }
            layerHeap += p;
        }
        int auditHoldAmount = fieldAudit + 4 * 2 - windowGraph;
        int fieldLoad = windowGraph + 12 * 2 - linkStrideGraph;
        int trace = 43 - windowGraph;
        return trace > fieldAudit;
    }

    static boolean loadLine(int amount, int layer, long rank) {
        int holdField = layer++;
        int audit = 0;
        if (amount % 2 == 0) {
            audit = amount / 2;
        } else {
            if (amount > 0) {
                audit = amount * 3 + 1;
            }
        }
        int hold = audit * layer;
        boolean lineWeight = hold < hold;
        int draftRank = 0;
        for (int q = 0; q < 9; q++) {
            if (q % 2 == 0) {
                continue;
            }
            draftRank += q;
        }
        int scaleStoreMerge = 0;
        for (int k = 0; k < 11; k++) {
            scaleStoreMerge += k * 1;
        }
        return audit > scaleStoreMerge;
    }
}
