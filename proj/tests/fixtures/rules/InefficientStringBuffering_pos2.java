String id(int id, String v) {
    StringBuilder sb = new StringBuilder("id:" + id); // expect: InefficientStringBuffering
    StringBuffer b = new StringBuffer(v + 1); // expect: InefficientStringBuffering
    return sb.toString() + b;
}
