int work0(int n, int[] data, StringBuilder sb) {
    String s10 = "n=" + n;
    s10 += n;
    int v11 = n - 1;
    String s11 = "n=" + v11;
    data[2] = n * 2;
    return n;
}
