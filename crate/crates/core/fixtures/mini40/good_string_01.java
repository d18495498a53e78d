String render1(String name) {
    StringBuilder sb = new StringBuilder();
    sb.append(name);
    sb.append(1);
    return sb.toString();
}
