void m(int x) {
    assert x > 0;
}
