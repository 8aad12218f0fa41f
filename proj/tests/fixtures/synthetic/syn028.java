public class Syn28 {
    int work0(int n, int[] data, StringBuilder sb) {
        int v21 = 11;
        while (n < 30) {
            n++;
            while (v21 < 25) {
                v21++;
                int v42 = n + 5;
                System.out.println(v42);
                sb.append(v21);
            }
            sb.append(n);
            while (v21 < 19) {
                v21++;
                v21++;
                int v42 = n - 1;
                System.out.println(v42);
            }
            data[0] = n - 1;
        }
        for (int i2 = 0; i2 < 4; i2++) {
            int v33 = 1;
            int v34 = n;
            String s30 = "n=" + n;
            s30 += v21;
            String s31 = "" + v33;
            s31 += v33;
            System.out.println(s30);
        }
        String s20 = new String("t");
        System.out.println(s20);
        return n;
    }
}
