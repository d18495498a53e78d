void probe(StringBuilder sb) {
    sb.append("x");
    keep(sb);
}
