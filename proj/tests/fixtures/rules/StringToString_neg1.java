String build(StringBuilder sb) {
    return sb.toString();
}
