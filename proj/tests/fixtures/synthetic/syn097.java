public class Syn97 {
    int work0(int n, int[] data, StringBuilder sb) {
        int v21 = n + 4;
        for (int i2 = 0; i2 < 4; i2++) {
            sb.append("x");
            String s30 = "" + v21;
            data[1] = i2 - 1;
        }
        String s20 = "";
        s20 += v21;
        return n;
    }
}
