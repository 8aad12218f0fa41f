Long box() {
    Long v = new Long(5);
    return v;
}
