boolean from(String s, String prefix) {
    return s.startsWith(prefix) || s.startsWith("a", 1);
}
