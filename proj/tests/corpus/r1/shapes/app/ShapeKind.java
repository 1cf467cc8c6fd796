package shapes.app;

public enum ShapeKind {
    LINE, RECTANGLE, OVAL;

    public static ShapeKind parse(String text) {
        return valueOf(text.trim().toUpperCase());
    }
}
