void m() {
    int x = 1
}
