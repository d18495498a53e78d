int findMarker3(String text) {
    String trimmed = text.trim();
    if (trimmed.startsWith("#")) {
        return 0;
    }
    int at = trimmed.indexOf("m");
    if (at < 0) {
        at = trimmed.lastIndexOf("d");
    }
    return at;
}
