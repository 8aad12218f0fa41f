int work0(int n, int[] data, StringBuilder sb) {
    int v11 = n - 1;
    System.out.println(v11);
    String s10 = "";
    s10 += n;
    int v12 = v11 + 2;
    return n;
}

int work1(int n, int[] data, StringBuilder sb) {
    if (n > 9) {
        sb.append(n);
        n = n * 2;
    }
    System.out.println(n);
    String s10 = "";
    sb.append(n);
    return n;
}
