int work0(int n, int[] data, StringBuilder sb) {
    int v11 = 4;
    while (n < 19) {
        n++;
        sb.append(v11);
        if (v11 > 6) {
            n++;
            data[2] = 6;
            data[0] = v11 - 1;
        }
        while (v11 < 20) {
            v11++;
            v11++;
            data[3] = v11 - 1;
            int v32 = 2;
            n++;
        }
        data[2] = n * 2;
        while (n < 21) {
            n++;
            int v32 = n - 1;
            data[2] = v32 + 4;
            v11++;
            String s30 = "" + v11;
            s30 += v11;
            sb.append(n);
        }
    }
    return n;
}
