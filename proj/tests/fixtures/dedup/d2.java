void g() {
    int x = 0;
    x++;
    x--;
}
