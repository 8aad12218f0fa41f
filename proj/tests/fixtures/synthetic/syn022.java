int work0(int n, int[] data, StringBuilder sb) {
    int v11 = n + 9;
    if (n > 6) {
        data[1] = n - 1;
        if (v11 > 3) {
            n++;
            int v32 = 17;
        }
        sb.append("ab");
        String s20 = new String("t");
    } else {
        int v22 = 0;
        if (v22 > 3) {
            String s30 = "n=" + v22;
            s30 += v11;
            v22++;
            data[3] = v22 * 2;
            data[3] = 19;
            System.out.println(s30);
        }
        n = v22 * 2;
    }
    int v12 = v11;
    if (v12 > 4) {
        data[2] = n * 2;
        while (n < 21) {
            n++;
            v12++;
            v11 = 0;
            int v33 = v11;
            int v34 = 20;
            n = v11 * 2;
        }
    }
    String s10 = new String("t");
    return n;
}
