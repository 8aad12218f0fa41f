void fill(java.util.List<Integer> list, int n) {
    list.clear();
    list.add(new Integer(n));
}
