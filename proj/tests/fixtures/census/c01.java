void show(int n) {
    int m = n + 1;
    System.out.println("" + n);
    System.out.println(m);
}
