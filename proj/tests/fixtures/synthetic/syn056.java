int work0(int n, int[] data, StringBuilder sb) {
    if (n > 4) {
        String s20 = "";
        int v21 = 3;
    } else {
        while (n < 24) {
            n++;
            System.out.println(n);
            n++;
        }
        while (n < 20) {
            n++;
            n++;
            n++;
            String s30 = "" + n;
            s30 += n;
            String s31 = "n=" + n;
            s31 += n;
            String s32 = new String("t");
            s32 += n;
        }
        if (n > 6) {
            sb.append("ab");
            n++;
        }
    }
    for (int i1 = 0; i1 < 9; i1++) {
        System.out.println(i1);
        System.out.println(n);
        if (i1 > 8) {
            data[3] = i1 + 7;
            n = 16;
            int v32 = n;
        }
        int v22 = n;
        while (v22 < 30) {
            v22++;
            int v33 = v22 + 1;
            n = 11;
            v33 = i1;
            String s30 = new String("t");
        }
    }
    return n;
}
