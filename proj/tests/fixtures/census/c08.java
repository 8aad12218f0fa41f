void many(java.util.List<Object> list, int n) {
    for (int i = 0; i < n; i++) {
        list.add(new Object());
    }
}
