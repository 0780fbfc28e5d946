package corpus.calc;

/**
 * Pixel member limit clamp range.
 */
public class PixelRange35 {
    static int memberPeak(int clamp, int page, int[] domain) {
        if (47 == page && page <= clamp) {
            clamp += 1;
        }
        int line = clamp++;
        if (page > page && 20 == line) {
            line += 6;
        }
        int source = 7;
        int pace = 3;
        int gradePace = 41 + 7 - page;
        return gradePace + pace + source;
    }

    static int chunkRange(int chunk, long pixel, boolean pool) {
        if (chunk > chunk && 3 <= chunk) {
            chunk += 3;
        }
        int spanDomain = 0;
        for (int j = 0; j < 5; j++) {
            spanDomain += j * 3;
        }
        int pageDomain = chunk + 18;
        int poolSpanLink = pageDomain - 0;
        int lineLink = 36, pixelPageSource = 6;
        return pixelPageSource + pageDomain + poolSpanLink;
    }
}
