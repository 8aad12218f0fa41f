int work0(int n, int[] data, StringBuilder sb) {
    sb.append(n);
    System.out.println(n);
    sb.append(n);
    for (int i1 = 0; i1 < 4; i1++) {
        for (int i2 = 0; i2 < 2; i2++) {
            n++;
            i1++;
        }
        while (i1 < 15) {
            i1++;
            n++;
            n = i1 + 5;
            data[1] = 17;
            int v32 = n - 1;
            data[0] = v32 + 4;
        }
        i1 = 3;
    }
    return n;
}

int work1(int n, int[] data, StringBuilder sb) {
    if (n > 0) {
        String s20 = "";
        s20 += n;
        while (n < 26) {
            n++;
            String s31 = "n=" + n;
            System.out.println(s20);
            n = 17;
        }
        while (n < 16) {
            n++;
            data[2] = n;
            n++;
            n = n;
        }
    }
    System.out.println(n);
    int v11 = n + 2;
    data[3] = v11 * 2;
    int v12 = n - 1;
    return n;
}
