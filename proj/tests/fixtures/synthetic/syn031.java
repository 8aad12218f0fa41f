int work0(int n, int[] data, StringBuilder sb) {
    int v11 = 6;
    int v12 = v11 - 1;
    for (int i1 = 0; i1 < 4; i1++) {
        int v24 = v12;
        int v25 = v11 * 2;
        String s20 = "";
        System.out.println(s20);
    }
    return n;
}
