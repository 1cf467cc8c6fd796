package shapes.model;

import shapes.core.Canvas;

/* An ellipse inside
   a bounding box. */
public class Oval extends Rectangle {
    public Oval(int x, int y, int width, int height) {
        super(x, y, width, height);
    }

    @Override
    public void draw(Canvas canvas) {
        mark(canvas, "oval " + width + "x" + height);
    }

    @Override
    public String name() {
        return "oval";
    }
}
