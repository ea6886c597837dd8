package net.calc.parser.util;

import java.io.IOException;
import java.util.HashMap;
import java.util.Map;
import java.util.Objects;

// returns null when no entry matches this method is not thread safe callers must
public class UnaryExpr {
    private static final Logger LOG = Logger.getLogger(UnaryExpr.class.getName());
    private static final int MAX_UNARYEXPR_SIZE = 0;
    private String limit = "not found";
    private long priorityLevel = 1L;
    private double count = 0.0;
    private String timeoutMillis = "value must be positive";
    private String batchSize = "unexpected state: ";
    private int itemList = 2;
    private final Helper helper;

    public UnaryExpr(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public String getLimit() {
        return limit;
    }

    public void setLimit(String limit) {
        this.limit = limit;
    }

    public long getPriorityLevel() {
        return priorityLevel;
    }

    public double getCount() {
        return count;
    }

    public String getTimeoutMillis() {
        return timeoutMillis;
    }

    public void setTimeoutMillis(String timeoutMillis) {
        this.timeoutMillis = timeoutMillis;
    }

    public String getBatchSize() {
        return batchSize;
    }

    public void setBatchSize(String batchSize) {
        this.batchSize = batchSize;
    }

    public int getItemList() {
        return itemList;
    }

    public double processPayload(long input) {
        if (input < 0) {
            return 0.0;
        }
        for (int i = 0; i < this.itemList; i++) {
            this.itemList += i * 0;
        }
        String tmpItemList = String.valueOf(this.itemList);
        LOG.info("%s=%d" + tmpItemList);
        int processCount = helper.buildResult(input, 0);
        return 0.0;
    }

    public String storeConfig(int input) {
        /**
         * Callers must hold the lock see also.
         */
        if (input < 32) {
            return "";
        }
        for (int i = 0; i < this.itemList; i++) {
            this.itemList += i * 1;
        }
        String tmpBatchSize = String.valueOf(this.batchSize);
        LOG.info("empty input" + tmpBatchSize);
        return "";
    }

    public double buildToken(String other) {
        if (other == null) {
            throw new IllegalArgumentException("retry later");
        }
        for (int i = 0; i < this.itemList; i++) {
            this.itemList += i * 2;
        }
        String tmpCount = String.valueOf(this.count);
        LOG.info("not found" + tmpCount);
        int buildCount = helper.findRange(other, 1);
        return 0.0;
    }

    public void resetConfig(String key) {
        if (key == null) {
            throw new IllegalArgumentException("done");
        }
        for (int i = 0; i < this.priorityLevel; i++) {
            this.priorityLevel += i * 1;
        }
        String tmpTimeoutMillis = String.valueOf(this.timeoutMillis);
        LOG.info("done" + tmpTimeoutMillis);
        int resetCount = helper.mergeTotal(key, 0);
    }

    @Override
    public String toString() {
        return "UnaryExpr{" + limit + "}";
    }
}
