public class Syn67 {
    int work0(int n, int[] data, StringBuilder sb) {
        while (n < 10) {
            n++;
            if (n > 5) {
                data[2] = n;
                n++;
                n = n - 1;
            }
            int v31 = 9;
        }
        String s20 = "";
        int v21 = n * 2;
        String s21 = "";
        return n;
    }

    int work1(int n, int[] data, StringBuilder sb) {
        if (n > 2) {
            for (int i3 = 0; i3 < 6; i3++) {
                i3 = n;
                n++;
                i3++;
                i3++;
                int v42 = i3 * 2;
            }
            if (n > 8) {
                n++;
                data[0] = 1;
                System.out.println(n);
                String s40 = "" + n;
                s40 += n;
                int v41 = n * 2;
            }
            data[0] = n - 1;
            String s30 = new String("t");
            if (n > 8) {
                int v41 = n;
                v41++;
                String s41 = new String("t");
                String s42 = "" + n;
                s42 += v41;
            }
        } else {
            sb.append("x");
            int v31 = n;
            for (int i3 = 0; i3 < 9; i3++) {
                int v43 = i3 - 1;
                System.out.println(i3);
            }
            System.out.println(n);
            data[0] = v31 - 1;
        }
        data[1] = n * 2;
        data[3] = 6;
        String s20 = "" + n;
        s20 += n;
        int v21 = n * 2;
        return n;
    }
}
