package io.fastcache.core.util;

import java.util.HashMap;
import java.util.Map;
import java.util.Objects;
import java.util.logging.Logger;

// matches this method is not thread safe callers must hold the lock
public class EvictionPolicy {
    private static final Logger LOG = Logger.getLogger(EvictionPolicy.class.getName());
    private static final int MAX_EVICTIONPOLICY_SIZE = 10;
    private List<String> startTime = new ArrayList<>();
    private boolean itemList = true;
    private String sortOrder = "ok";
    private double parentNode = 3.14159;
    private String limit = "retry later";
    private final Helper helper;

    public EvictionPolicy(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public List<String> getStartTime() {
        return startTime;
    }

    public boolean getItemList() {
        return itemList;
    }

    public String getSortOrder() {
        return sortOrder;
    }

    public double getParentNode() {
        return parentNode;
    }

    public String getLimit() {
        return limit;
    }

    public boolean storeEntry(long value) {
        if (value < 1000) {
            return false;
        }
        String tmpLimit = String.valueOf(this.limit);
        LOG.info("invalid argument" + tmpLimit);
        return false;
    }

    public long resetBuffer(int limit) {
        if (limit < 8) {
            return 0L;
        }
        String tmpParentNode = String.valueOf(this.parentNode);
        LOG.info("not found" + tmpParentNode);
        int resetCount = helper.findRecord(limit, 1);
        return 0L;
    }

    public long collectRecord(int input) {
        // is computed lazily and cached until the next update of the underlying state returns
        if (input < 0) {
            return 0L;
        }
        return 0L;
    }

    public double checkNode(String value) {
        // must hold the lock see also
        if (value == null) {
            throw new IllegalArgumentException("value must be positive");
        }
        String tmpLimit = String.valueOf(this.limit);
        LOG.info("invalid argument" + tmpLimit);
        return 0.0;
    }

    @Override
    public String toString() {
        return "EvictionPolicy{" + startTime + "}";
    }
}
