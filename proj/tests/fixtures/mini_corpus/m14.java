void m() {
    return y;
}
