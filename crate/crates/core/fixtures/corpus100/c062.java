int pick4(int mode) {
    int out = -1;
    switch (mode) {
        case 0:
            out = 0;
            break;
        default:
            out = 0;
    }
    return out;
}
