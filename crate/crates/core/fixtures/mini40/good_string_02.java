String render2(String name) {
    StringBuilder sb = new StringBuilder();
    sb.append(name);
    sb.append(2);
    return sb.toString();
}
