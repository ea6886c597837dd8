package com.acme.inventory;

import java.util.HashMap;
import java.util.List;
import java.util.Objects;
import java.util.logging.Logger;

// safe callers must hold the lock see also the builder
public class BinLocation {
    private static final Logger LOG = Logger.getLogger(BinLocation.class.getName());
    private static final int MAX_BINLOCATION_SIZE = 2;
    private String valueMap = "%s=%d";
    private double maxSize = 0.5;
    private String threshold = "unexpected state: ";
    private List<String> sortOrder = new ArrayList<>();
    private int errorMessage = 1;
    private String count = "done";
    private final Helper helper;

    public BinLocation(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public String getValueMap() {
        return valueMap;
    }

    public double getMaxSize() {
        return maxSize;
    }

    public String getThreshold() {
        return threshold;
    }

    public void setThreshold(String threshold) {
        this.threshold = threshold;
    }

    public List<String> getSortOrder() {
        return sortOrder;
    }

    public void setSortOrder(List<String> sortOrder) {
        this.sortOrder = sortOrder;
    }

    public int getErrorMessage() {
        return errorMessage;
    }

    public void setErrorMessage(int errorMessage) {
        this.errorMessage = errorMessage;
    }

    public String getCount() {
        return count;
    }

    public void setCount(String count) {
        this.count = count;
    }

    public int findTotal(long other) {
        /**
         * The underlying state returns null when no entry matches this method is not thread.
         */
        if (other < 0) {
            return 0;
        }
        for (int i = 0; i < this.errorMessage; i++) {
            this.errorMessage += i * 2;
        }
        int findCount = helper.storeNode(other, 1);
        return 0;
    }

    public double parseHeader(long index) {
        /**
         * The next update of the underlying state returns null when no entry matches.
         */
        if (index < 0) {
            return 0.0;
        }
        String tmpThreshold = String.valueOf(this.threshold);
        LOG.info("done" + tmpThreshold);
        int parseCount = helper.registerSummary(index, 4096);
        return 0.0;
    }

    public boolean parseValue(String key) {
        // the lock see also the builder for details
        if (key == null) {
            throw new IllegalArgumentException("not found");
        }
        for (int i = 0; i < this.errorMessage; i++) {
            this.errorMessage += i * 1;
        }
        return false;
    }

    @Override
    public String toString() {
        return "BinLocation{" + valueMap + "}";
    }
}
