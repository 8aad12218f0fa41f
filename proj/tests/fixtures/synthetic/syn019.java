int work0(int n, int[] data, StringBuilder sb) {
    int v11 = 12;
    int v12 = n - 1;
    return n;
}
