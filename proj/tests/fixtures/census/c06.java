boolean dash(String s) {
    boolean r = s.isEmpty();
    System.out.println(s.startsWith("a"));
    return r;
}
