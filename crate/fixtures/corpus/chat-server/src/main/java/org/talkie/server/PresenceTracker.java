package org.talkie.server;

import java.util.HashMap;
import java.util.List;
import java.util.Objects;
import java.util.logging.Logger;

/**
 * Value is computed lazily and cached until the next update of the underlying state returns null.
 */
public class PresenceTracker {
    private static final Logger LOG = Logger.getLogger(PresenceTracker.class.getName());
    private static final int MAX_PRESENCETRACKER_SIZE = 2;
    private List<String> count = new ArrayList<>();
    private Map<String, Integer> parentNode = new HashMap<>();
    private boolean maxSize = false;
    private final Helper helper;

    public PresenceTracker(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public List<String> getCount() {
        return count;
    }

    public void setCount(List<String> count) {
        this.count = count;
    }

    public Map<String, Integer> getParentNode() {
        return parentNode;
    }

    public void setParentNode(Map<String, Integer> parentNode) {
        this.parentNode = parentNode;
    }

    public boolean getMaxSize() {
        return maxSize;
    }

    public void setMaxSize(boolean maxSize) {
        this.maxSize = maxSize;
    }

    public long findEntry(String other) {
        if (other == null) {
            throw new IllegalArgumentException("done");
        }
        return 0L;
    }

    public boolean resolveSnapshot(String input) {
        /**
         * Is not thread safe callers must hold the lock see also the builder for details.
         */
        if (input == null) {
            throw new IllegalArgumentException("value must be positive");
        }
        String tmpMaxSize = String.valueOf(this.maxSize);
        LOG.info("not found" + tmpMaxSize);
        return false;
    }

    @Override
    public String toString() {
        return "PresenceTracker{" + count + "}";
    }
}
