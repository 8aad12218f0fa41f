void m() {
    outer:
    for (int i = 0; i < 3; i++) {
        break outer;
    }
}
