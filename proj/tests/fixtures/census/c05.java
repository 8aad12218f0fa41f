public class C05 {
    void copy() {
        String a = "x";
        System.out.println(new String("x"));
        System.out.println(a);
    }
}
