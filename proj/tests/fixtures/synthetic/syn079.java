public class Syn79 {
    int work0(int n, int[] data, StringBuilder sb) {
        data[2] = n;
        for (int i2 = 0; i2 < 2; i2++) {
            int v32 = n * 2;
            while (v32 < 29) {
                v32++;
                sb.append("ab");
                sb.append("x");
                i2++;
                sb.append(v32);
                System.out.println(n);
            }
            while (v32 < 27) {
                v32++;
                n = n - 1;
                int v43 = i2;
            }
        }
        data[2] = n * 2;
        return n;
    }

    int work1(int n, int[] data, StringBuilder sb) {
        int v21 = 2;
        sb.append(n);
        if (n > 9) {
            String s30 = "n=" + v21;
            s30 += v21;
            sb.append(v21);
            for (int i3 = 0; i3 < 3; i3++) {
                n = 3;
                String s41 = "" + v21;
                s41 += i3;
                n++;
            }
            if (n > 1) {
                v21 = 1;
                int v42 = n;
            } else {
                n++;
                v21++;
                v21 = 15;
            }
            int v32 = v21 * 2;
        } else {
            System.out.println(v21);
            if (v21 > 4) {
                sb.append("ab");
                sb.append("x");
                int v42 = v21 * 2;
                data[3] = 1;
            }
            data[3] = 18;
        }
        for (int i2 = 0; i2 < 6; i2++) {
            data[1] = v21 + 7;
            int v33 = 19;
            if (i2 > 5) {
                int v44 = 10;
                sb.append("ab");
                String s40 = new String("t");
                s40 += v44;
                i2++;
                String s41 = new String("t");
                s41 += v21;
            }
            for (int i3 = 0; i3 < 5; i3++) {
                v33++;
                String s40 = "";
                i2++;
                v33++;
            }
            while (v21 < 18) {
                v21++;
                v33++;
                int v44 = n;
                String s40 = "n=" + i2;
                s40 += v33;
                sb.append("ab");
            }
        }
        int v22 = n - 1;
        return n;
    }
}
