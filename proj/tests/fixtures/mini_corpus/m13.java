void m() {
    /* never closed
}
