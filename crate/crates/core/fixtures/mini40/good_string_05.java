String render5(String name) {
    StringBuilder sb = new StringBuilder();
    sb.append(name);
    sb.append(5);
    return sb.toString();
}
