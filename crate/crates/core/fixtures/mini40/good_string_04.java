String render4(String name) {
    StringBuilder sb = new StringBuilder();
    sb.append(name);
    sb.append(4);
    return sb.toString();
}
