int pick1(int mode) {
    int out = -1;
    switch (mode) {
        case 0:
            out = 0;
            break;
        case 1:
            out = 2;
            break;
        case 2:
            out = 4;
            break;
        default:
            out = 0;
    }
    return out;
}
