int work0(int n, int[] data, StringBuilder sb) {
    System.out.println(n);
    sb.append(n);
    while (n < 15) {
        n++;
        data[0] = 14;
        int v21 = n + 7;
        n = 13;
    }
    return n;
}

int work1(int n, int[] data, StringBuilder sb) {
    n = 18;
    int v11 = n;
    return n;
}
