// comment only
public class Silent { }
