public class Syn7 {
    int work0(int n, int[] data, StringBuilder sb) {
        int v21 = n + 4;
        data[0] = 7;
        data[1] = v21 + 7;
        while (n < 21) {
            n++;
            String s30 = "n=" + n;
            s30 += v21;
            v21 = n * 2;
            sb.append("ab");
        }
        String s20 = "" + n;
        return n;
    }
}
