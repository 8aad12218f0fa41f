int work0(int n, int[] data, StringBuilder sb) {
    int v11 = 6;
    int v12 = v11 - 1;
    return n;
}

int work1(int n, int[] data, StringBuilder sb) {
    String s10 = new String("t");
    for (int i1 = 0; i1 < 3; i1++) {
        while (n < 12) {
            n++;
            data[0] = n * 2;
            n++;
        }
        i1 = i1 + 5;
        data[2] = i1 + 8;
        i1 = n + 6;
    }
    n = n - 1;
    return n;
}
