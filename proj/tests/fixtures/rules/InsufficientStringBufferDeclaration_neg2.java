String fits() {
    StringBuilder sb = new StringBuilder("ab");
    sb.append("0123456789");
    return sb.toString();
}
