int work0(int n, int[] data, StringBuilder sb) {
    String s10 = "" + n;
    int v11 = n + 4;
    sb.append("ab");
    data[0] = n;
    return n;
}
