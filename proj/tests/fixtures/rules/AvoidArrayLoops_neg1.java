public class Scale {
    void scale(int[] src, int[] dst) {
        for (int i = 0; i < src.length; i++) {
            dst[i] = src[i] * 2;
        }
        for (int i = 0; i < src.length; i++)
            dst[i] = src[i];
    }
}
