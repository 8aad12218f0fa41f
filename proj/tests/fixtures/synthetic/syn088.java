int work0(int n, int[] data, StringBuilder sb) {
    String s10 = new String("t");
    int v11 = n - 1;
    sb.append(n);
    return n;
}

int work1(int n, int[] data, StringBuilder sb) {
    int v11 = 8;
    n = 1;
    return n;
}
