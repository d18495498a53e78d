String describe2(String name, int id) {
    String label = "";
    label += name;
    label += "-" + id;
    StringBuilder sb = new StringBuilder();
    sb.append(label);
    sb.append("#");
    return sb.toString();
}
