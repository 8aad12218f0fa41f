// the classic example
void classic() {
    int classic = 3;
    classic++;
}
