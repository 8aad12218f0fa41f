int work0(int n, int[] data, StringBuilder sb) {
    sb.append("x");
    while (n < 18) {
        n++;
        int v21 = n + 3;
        while (v21 < 29) {
            v21++;
            v21 = n;
            v21++;
            n++;
            n = v21 * 2;
        }
    }
    for (int i1 = 0; i1 < 6; i1++) {
        System.out.println(i1);
        int v22 = n;
        while (v22 < 23) {
            v22++;
            data[2] = 15;
            int v33 = i1 + 8;
            data[3] = n + 3;
        }
        int v23 = 3;
    }
    int v11 = n;
    return n;
}
