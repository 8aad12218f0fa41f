public class Show {
    String show(int n) {
        String s = "n=" + String.valueOf(n); // expect: UselessStringValueOf
        return s;
    }
}
