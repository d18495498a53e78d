String render0(String name) {
    StringBuilder sb = new StringBuilder();
    sb.append(name);
    sb.append(0);
    return sb.toString();
}
