String render3(String name) {
    StringBuilder sb = new StringBuilder();
    sb.append(name);
    sb.append(3);
    return sb.toString();
}
