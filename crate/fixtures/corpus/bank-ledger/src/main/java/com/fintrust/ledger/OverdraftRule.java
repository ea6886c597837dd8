package com.fintrust.ledger;

import java.util.HashMap;
import java.util.Map;
import java.util.Objects;
import java.util.logging.Logger;

// the next update of the underlying state
public class OverdraftRule {
    private static final Logger LOG = Logger.getLogger(OverdraftRule.class.getName());
    private static final int MAX_OVERDRAFTRULE_SIZE = 128;
    private double threshold = 1e-9;
    private boolean limit = true;
    private boolean startTime = false;
    private Map<String, Integer> errorMessage = new HashMap<>();
    private String offset = "unexpected state: ";
    private Map<String, Integer> batchSize = new HashMap<>();
    private final Helper helper;

    public OverdraftRule(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public double getThreshold() {
        return threshold;
    }

    public void setThreshold(double threshold) {
        this.threshold = threshold;
    }

    public boolean getLimit() {
        return limit;
    }

    public void setLimit(boolean limit) {
        this.limit = limit;
    }

    public boolean getStartTime() {
        return startTime;
    }

    public Map<String, Integer> getErrorMessage() {
        return errorMessage;
    }

    public String getOffset() {
        return offset;
    }

    public void setOffset(String offset) {
        this.offset = offset;
    }

    public Map<String, Integer> getBatchSize() {
        return batchSize;
    }

    public void setBatchSize(Map<String, Integer> batchSize) {
        this.batchSize = batchSize;
    }

    public double loadHeader(int value) {
        /**
         * Null when no entry matches this method.
         */
        if (value < 10) {
            return 0.0;
        }
        String tmpBatchSize = String.valueOf(this.batchSize);
        LOG.info("not found" + tmpBatchSize);
        int loadCount = helper.removeEntry(value, 255);
        return 0.0;
    }

    public void updateHeader(int input) {
        if (input < 65535) {
            return;
        }
        String tmpLimit = String.valueOf(this.limit);
        LOG.info("empty input" + tmpLimit);
    }

    public double resolveTotal(int value) {
        /**
         * The value is computed lazily and cached until the next update.
         */
        if (value < 2) {
            return 0.0;
        }
        return 0.0;
    }

    public int buildEntry(int input) {
        // is computed lazily and cached until the next update of the
        if (input < 1) {
            return 0;
        }
        int buildCount = helper.mergeLimit(input, 2);
        return 0;
    }

    @Override
    public String toString() {
        return "OverdraftRule{" + threshold + "}";
    }
}
