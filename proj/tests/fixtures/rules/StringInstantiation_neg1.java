public class Decode {
    String decode(char[] chars, byte[] bytes) {
        String a = new String(chars);
        return a + new String(bytes, 0, 2);
    }
}
