void name(StringBuilder sb, String name) {
    sb.append(name);
}
