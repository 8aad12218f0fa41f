int work0(int n, int[] data, StringBuilder sb) {
    int v11 = n;
    v11 = n * 2;
    while (v11 < 11) {
        v11++;
        sb.append("ab");
        System.out.println(n);
        while (n < 11) {
            n++;
            data[0] = n - 1;
            v11++;
            v11 = v11 * 2;
            v11++;
        }
        System.out.println(v11);
        if (v11 > 7) {
            int v32 = 9;
            System.out.println(v11);
            data[3] = 17;
            System.out.println(v32);
        }
    }
    return n;
}
