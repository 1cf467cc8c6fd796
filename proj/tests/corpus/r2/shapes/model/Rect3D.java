package shapes.model;

import shapes.core.Canvas;

public class Rect3D extends Rectangle {
    private int depth;

    public Rect3D(int x, int y, int width, int height, int depth) {
        super(x, y, width, height);
        this.depth = depth;
    }

    @Override
    public void draw(Canvas canvas) {
        super.draw(canvas);
        mark(canvas, "depth " + depth);
    }

    @Override
    public String name() {
        return "3D rectangle";
    }
}
