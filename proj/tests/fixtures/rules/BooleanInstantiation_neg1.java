public class Flag2 {
    Boolean flag(boolean f) {
        Boolean a = Boolean.TRUE;
        return Boolean.valueOf(f) && a;
    }
}
