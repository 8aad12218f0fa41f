public class Find {
    int find(String s) {
        int p = s.indexOf("a"); // expect: UseIndexOfChar
        return p;
    }
}
