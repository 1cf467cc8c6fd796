package shapes.app;

public enum ShapeKind {
    LINE, RECT3D, ROUND_RECT;

    public static ShapeKind parse(String text) {
        return valueOf(text.trim().toUpperCase());
    }
}
