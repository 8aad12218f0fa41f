boolean m(Object o) {
    return o instanceof String s && s.isEmpty();
}
