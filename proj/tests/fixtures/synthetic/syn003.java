int work0(int n, int[] data, StringBuilder sb) {
    System.out.println(n);
    int v11 = n;
    int v12 = v11;
    return n;
}

int work1(int n, int[] data, StringBuilder sb) {
    data[1] = n - 1;
    System.out.println(n);
    int v11 = 0;
    int v12 = v11 + 4;
    return n;
}
