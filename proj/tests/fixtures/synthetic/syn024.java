public class Syn24 {
    int work0(int n, int[] data, StringBuilder sb) {
        while (n < 16) {
            n++;
            n = n;
            while (n < 16) {
                n++;
                data[3] = n - 1;
                n++;
                sb.append("ab");
                n = n + 4;
                n++;
            }
            data[2] = n + 1;
            while (n < 13) {
                n++;
                System.out.println(n);
                int v41 = 9;
                data[3] = v41 + 9;
                v41 = v41 * 2;
                System.out.println(v41);
            }
            while (n < 21) {
                n++;
                n = 6;
                int v41 = n;
            }
        }
        n = n + 3;
        if (n > 5) {
            n = n * 2;
            for (int i3 = 0; i3 < 2; i3++) {
                n++;
                System.out.println(i3);
                int v42 = i3 + 2;
                sb.append("ab");
            }
            n = n;
            int v31 = n + 5;
            while (n < 19) {
                n++;
                System.out.println(n);
                sb.append("x");
                System.out.println(v31);
                data[1] = 18;
            }
        }
        sb.append(n);
        return n;
    }

    int work1(int n, int[] data, StringBuilder sb) {
        while (n < 23) {
            n++;
            if (n > 7) {
                String s40 = "";
                s40 += n;
                int v41 = n + 6;
                String s41 = "";
                s41 += n;
                int v42 = 17;
            }
            int v31 = n - 1;
            int v32 = 8;
            if (v32 > 8) {
                v32 = n * 2;
                String s40 = new String("t");
                data[2] = v32 + 4;
            } else {
                v31++;
                v31 = 16;
                int v43 = v31 * 2;
            }
        }
        System.out.println(n);
        n = n + 8;
        return n;
    }
}
