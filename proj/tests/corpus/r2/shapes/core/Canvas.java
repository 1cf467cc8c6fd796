package shapes.core;

import java.util.ArrayList;
import java.util.List;

public class Canvas {
    private final List<String> commands = new ArrayList<>();
    private int width;
    private int height;

    public Canvas(int width, int height) {
        this.width = width;
        this.height = height;
    }

    public void plot(String command) {
        commands.add(command + " /* end */");
    }

    public int getWidth() {
        return width;
    }

    public int getHeight() {
        return height;
    }

    public List<String> getCommands() {
        return commands;
    }
}
