package shapes.core;

public interface Colored {
    String DEFAULT_COLOR = "black";

    String color();

    default boolean isDefaultColor() {
        return DEFAULT_COLOR.equals(color());
    }
}
