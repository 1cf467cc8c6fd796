package shapes.util;

import java.util.HashMap;
import java.util.Map;

public final class Palette {
    private static final Map<String, Integer> COLORS = new HashMap<>();

    static {
        COLORS.put("black", 0x000000);
        COLORS.put("white", 0xFFFFFF);
    }

    private Palette() {
    }

    public static int lookup(String name) {
        Integer rgb = COLORS.get(name);
        return rgb == null ? 0 : rgb;
    }

    /** A named color. */
    public static final class Entry {
        public final String name;
        public final int rgb;

        public Entry(String name) {
            this.name = name;
            this.rgb = lookup(name);
        }
    }
}
