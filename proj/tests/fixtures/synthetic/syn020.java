int work0(int n, int[] data, StringBuilder sb) {
    System.out.println(n);
    System.out.println(n);
    for (int i1 = 0; i1 < 2; i1++) {
        System.out.println(i1);
        while (n < 27) {
            n++;
            n++;
            data[0] = n;
            System.out.println(n);
            int v32 = n - 1;
        }
        int v22 = i1;
        sb.append(n);
        int v23 = v22 - 1;
    }
    sb.append("x");
    return n;
}

int work1(int n, int[] data, StringBuilder sb) {
    while (n < 20) {
        n++;
        int v21 = n + 4;
        while (n < 10) {
            n++;
            n++;
            int v32 = 8;
        }
        String s20 = new String("t");
        while (v21 < 27) {
            v21++;
            String s31 = new String("t");
            s31 += v21;
            v21++;
            n++;
            v21++;
            System.out.println(s31);
        }
        int v22 = v21 * 2;
    }
    if (n > 5) {
        data[2] = n + 9;
        for (int i2 = 0; i2 < 6; i2++) {
            n++;
            sb.append(i2);
            System.out.println(n);
            n++;
        }
    } else {
        int v21 = n + 3;
        if (v21 > 9) {
            System.out.println(n);
            n++;
            String s30 = "" + n;
            int v32 = 15;
        }
    }
    return n;
}
