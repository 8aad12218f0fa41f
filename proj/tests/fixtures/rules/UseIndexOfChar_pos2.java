int last(String path) {
    int slash = path.lastIndexOf("/"); // expect: UseIndexOfChar
    return slash + path.indexOf(".", 3); // expect: UseIndexOfChar
}
