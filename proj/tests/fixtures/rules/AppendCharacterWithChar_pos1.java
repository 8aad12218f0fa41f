public class Dots {
    String dot(String name) {
        StringBuilder sb = new StringBuilder(name);
        sb.append("."); // expect: AppendCharacterWithChar
        return sb.toString();
    }
}
