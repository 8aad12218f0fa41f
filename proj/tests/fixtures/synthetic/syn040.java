int work0(int n, int[] data, StringBuilder sb) {
    int v11 = 9;
    sb.append("x");
    data[1] = n;
    int v12 = n * 2;
    return n;
}
