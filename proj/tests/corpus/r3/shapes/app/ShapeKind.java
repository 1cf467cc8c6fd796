package shapes.app;

public enum ShapeKind {
    LINE("l"), RECTANGLE("r"), RECT3D("3"), ROUND_RECT("rr"), OVAL("o");

    private final String code;

    ShapeKind(String code) {
        this.code = code;
    }

    public String code() {
        return code;
    }

    public static ShapeKind parse(String text) {
        for (ShapeKind k : values()) {
            if (k.code.equals(text)) {
                return k;
            }
        }
        return valueOf(text.trim().toUpperCase());
    }
}
