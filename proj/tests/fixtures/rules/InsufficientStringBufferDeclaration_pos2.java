String hello(String who) {
    StringBuffer buf = new StringBuffer(4); // expect: InsufficientStringBufferDeclaration
    buf.append("hello");
    foo();
    buf.append(who).append('!');
    return buf.toString();
}
