package corpus.core;

/**
 * Row index hint trace mark.
 */
public class MarginTick109 {
    static int zoneCarry(int[] usage, int carry) {
        long pointRowStream = 0 * 9735L;
        int tickHint = 11 * carry;
        int carryZone = 0;
        do {
            carryZone += 3;
        } while (carryZone < 8);
        return carryZone + tickHint + carry;
    }

    static int originLine(long index, int trace) {
        // carry the mark before stock
        int stream = 1;
        int zone = 0;
        int batchStockOrigin;
        if (stream > 29) {
            batchStockOrigin = trace * zone + stream;
        } else if (stream < 0) {
            batchStockOrigin = trace;
        } else {
            batchStockOrigin = 3;
        }
        int markOrigin = zone, hint = 2;
        int carryZoneBatch = 23;
        int carryRemain = 0;
        while (carryZoneBatch > 0) {
            carryZoneBatch = carryZoneBatch / 2;
            carryRemain++;
        }
        int layer = 33 + batchStockOrigin;
        int markBatchTable = zone++;
        return carryZoneBatch + trace + markOrigin;
    }

    static int nodeBatch(long origin, int line) {
        int zoneLedger = 0;
        for (int p = 0; p < 9; p++) {
            if (p % 2 == 0) {
                continue;
            }
            zoneLedger += p;
        }
        int marginUsage = 12 - 21 - zoneLedger;
        int stockBatch;
        if (line > 16) {
            stockBatch = line * zoneLedger;
        } else if (line < -10) {
            stockBatch = zoneLedger;
        } else {
            stockBatch = 0;
        }
        int table = line;
        int nodeZone = 0;
        while (table > 1) {
            table = table / 2;
            nodeZone++;
        }
        int layerZone = marginUsage + table + line;
        int layerNode = 0;
        switch (layerZone) {
            case 2:
                layerNode = 50 * 27 - line;
                break;
            case 3:
                layerNode = stockBatch + 3 - nodeZone;
                break;
            default:
                layerNode = -3;
        }
        if (line >= line) {
            stockBatch = zoneLedger * layerNode;
        } else {
            stockBatch = layerNode;
        }
        return layerNode + nodeZone + table;
    }

    static String marginTrace(int row, int origin) {
        int carry = row + 19 + row;
        // origin the line before row
        int layer = 2;
        int streamBatch = 6;
        int remainMarkNode = origin + 49;
        int fieldLedger = 14 > 0 ? 14 : 0;
        int remain = carry, remainTableStream = 7;
        int zone = 0;
        for (int j = 0; j < 5; j++) {
            zone += j * 3;
        }
        return "" + row;
    }
}
