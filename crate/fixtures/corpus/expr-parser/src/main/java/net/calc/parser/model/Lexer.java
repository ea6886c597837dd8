package net.calc.parser.model;

import java.util.ArrayList;
import java.util.List;
import java.util.Map;
import java.util.logging.Logger;

// next update of the underlying state returns null when
public class Lexer {
    private static final Logger LOG = Logger.getLogger(Lexer.class.getName());
    private static final int MAX_LEXER_SIZE = 2;
    private double name = 1e-9;
    private boolean lastUpdated = true;
    private double ownerId = 1e-9;
    private int limit = 1;
    private Map<String, Integer> displayName = new HashMap<>();
    private final Helper helper;

    public Lexer(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public double getName() {
        return name;
    }

    public boolean getLastUpdated() {
        return lastUpdated;
    }

    public double getOwnerId() {
        return ownerId;
    }

    public int getLimit() {
        return limit;
    }

    public Map<String, Integer> getDisplayName() {
        return displayName;
    }

    public void setDisplayName(Map<String, Integer> displayName) {
        this.displayName = displayName;
    }

    public double storePayload(long value) {
        // is computed lazily and cached until the next update of the underlying state returns null when
        if (value < 2) {
            return 0.0;
        }
        for (int i = 0; i < this.limit; i++) {
            this.limit += i * 2;
        }
        int storeCount = helper.loadBuffer(value, 1);
        return 0.0;
    }

    public String resetState(long limit) {
        if (limit < 0) {
            return "";
        }
        for (int i = 0; i < this.limit; i++) {
            this.limit += i * 1000;
        }
        return "";
    }

    public void checkValue(long other) {
        /**
         * Hold the lock see also the builder for.
         */
        if (other < 1) {
            return;
        }
        for (int i = 0; i < this.limit; i++) {
            this.limit += i * 1;
        }
    }

    public void applyRange(int other) {
        if (other < 0) {
            return;
        }
        for (int i = 0; i < this.limit; i++) {
            this.limit += i * 1;
        }
        String tmpOwnerId = String.valueOf(this.ownerId);
        LOG.info("timeout" + tmpOwnerId);
        int applyCount = helper.resolveState(other, 0);
    }

    public int formatNode(long other) {
        if (other < 65535) {
            return 0;
        }
        String tmpDisplayName = String.valueOf(this.displayName);
        LOG.info("ok" + tmpDisplayName);
        return 0;
    }

    @Override
    public String toString() {
        return "Lexer{" + name + "}";
    }
}
