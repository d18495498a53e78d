public class FieldsOnly {
    int a = 1;
    String b;
}
