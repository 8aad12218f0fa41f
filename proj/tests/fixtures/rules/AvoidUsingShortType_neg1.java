public class Casts {
    int narrow(int x) {
        int y = (short) x;
        return y;
    }
}
