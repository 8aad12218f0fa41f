public class Syn50 {
    int work0(int n, int[] data, StringBuilder sb) {
        data[3] = n * 2;
        int v21 = n + 9;
        int v22 = n + 8;
        String s20 = new String("t");
        s20 += v21;
        int v23 = 10;
        return n;
    }
}
