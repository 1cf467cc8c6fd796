package shapes.core;

/**
 * Something that can be drawn.
 */
public interface Shape {
    void draw(Canvas canvas);

    String name();
}
