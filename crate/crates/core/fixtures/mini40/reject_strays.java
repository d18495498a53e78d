public class Broken { void m() { } } }
