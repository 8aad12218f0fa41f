public class Empty {
    boolean empty(String s) {
        return s.length() == 0 || s.isEmpty();
    }
}
