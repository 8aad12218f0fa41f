public class Syn75 {
    int work0(int n, int[] data, StringBuilder sb) {
        n = 15;
        n = n - 1;
        for (int i2 = 0; i2 < 2; i2++) {
            System.out.println(n);
            int v32 = 18;
        }
        sb.append(n);
        if (n > 6) {
            while (n < 17) {
                n++;
                data[1] = n + 1;
                String s40 = "n=" + n;
                System.out.println(s40);
                n++;
            }
            int v31 = n * 2;
        }
        return n;
    }

    int work1(int n, int[] data, StringBuilder sb) {
        sb.append("ab");
        String s20 = new String("t");
        s20 += n;
        return n;
    }
}
