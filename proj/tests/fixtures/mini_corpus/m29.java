public class Tries {
    String read(java.io.Reader r) {
        try {
            return String.valueOf((char) r.read());
        } catch (java.io.IOException e) {
            return e.getMessage();
        } finally {
            System.out.println("done");
        }
    }
}
