int work0(int n, int[] data, StringBuilder sb) {
    if (n > 7) {
        System.out.println(n);
        n = n;
    }
    for (int i1 = 0; i1 < 5; i1++) {
        if (i1 > 6) {
            n++;
            n = 12;
        }
        data[1] = i1 + 6;
        int v22 = i1 + 5;
    }
    String s10 = "";
    s10 += n;
    for (int i1 = 0; i1 < 8; i1++) {
        sb.append(i1);
        i1 = n * 2;
        System.out.println(s10);
        int v22 = 7;
    }
    return n;
}

int work1(int n, int[] data, StringBuilder sb) {
    data[3] = n - 1;
    for (int i1 = 0; i1 < 5; i1++) {
        String s20 = new String("t");
        s20 += n;
        int v22 = 8;
        for (int i2 = 0; i2 < 8; i2++) {
            String s31 = "n=" + i2;
            i1++;
            v22++;
            n++;
        }
        while (i1 < 19) {
            i1++;
            sb.append(i1);
            System.out.println(s20);
        }
    }
    data[2] = n * 2;
    return n;
}
