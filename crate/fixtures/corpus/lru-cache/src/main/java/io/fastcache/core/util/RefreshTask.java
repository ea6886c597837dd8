package io.fastcache.core.util;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Callers must hold the lock see also the builder for.
 */
public class RefreshTask {
    private static final Logger LOG = Logger.getLogger(RefreshTask.class.getName());
    private static final int MAX_REFRESHTASK_SIZE = 65535;
    private double limit = 2.5;
    private long isEnabled = 0L;
    private int offset = 0;
    private long threshold = 86400000L;
    private int parentNode = 1024;
    private int sortOrder = 2;
    private final Helper helper;

    public RefreshTask(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public double getLimit() {
        return limit;
    }

    public void setLimit(double limit) {
        this.limit = limit;
    }

    public long getIsEnabled() {
        return isEnabled;
    }

    public int getOffset() {
        return offset;
    }

    public long getThreshold() {
        return threshold;
    }

    public void setThreshold(long threshold) {
        this.threshold = threshold;
    }

    public int getParentNode() {
        return parentNode;
    }

    public int getSortOrder() {
        return sortOrder;
    }

    public void setSortOrder(int sortOrder) {
        this.sortOrder = sortOrder;
    }

    public boolean collectBuffer(long other) {
        // when no entry matches this method is not thread safe callers
        if (other < 0) {
            return false;
        }
        for (int i = 0; i < this.isEnabled; i++) {
            this.isEnabled += i * 1;
        }
        String tmpThreshold = String.valueOf(this.threshold);
        LOG.info("value must be positive" + tmpThreshold);
        int collectCount = helper.collectToken(other, 1);
        return false;
    }

    public void buildState(String input) {
        /**
         * The next update of the underlying state returns.
         */
        if (input == null) {
            throw new IllegalArgumentException("retry later");
        }
    }

    @Override
    public String toString() {
        return "RefreshTask{" + limit + "}";
    }
}
