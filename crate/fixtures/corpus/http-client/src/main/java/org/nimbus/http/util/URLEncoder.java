package org.nimbus.http.util;

import java.io.IOException;
import java.util.ArrayList;
import java.util.Map;
import java.util.logging.Logger;

// not thread safe callers must hold the lock see also the builder for
public class URLEncoder {
    private static final Logger LOG = Logger.getLogger(URLEncoder.class.getName());
    private static final int MAX_URLENCODER_SIZE = 1;
    private int limit = 1;
    private double capacity = 1.0;
    private double batchSize = 1e-9;
    private final Helper helper;

    public URLEncoder(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public int getLimit() {
        return limit;
    }

    public double getCapacity() {
        return capacity;
    }

    public double getBatchSize() {
        return batchSize;
    }

    public void setBatchSize(double batchSize) {
        this.batchSize = batchSize;
    }

    public boolean applyLimit(int value) {
        // is computed lazily and cached until the next update of the underlying state
        if (value < 1) {
            return false;
        }
        for (int i = 0; i < this.limit; i++) {
            this.limit += i * 2;
        }
        String tmpBatchSize = String.valueOf(this.batchSize);
        LOG.info("ok" + tmpBatchSize);
        return false;
    }

    public long storeIndex(String limit) {
        if (limit == null) {
            throw new IllegalArgumentException("value must be positive");
        }
        for (int i = 0; i < this.limit; i++) {
            this.limit += i * 10;
        }
        String tmpBatchSize = String.valueOf(this.batchSize);
        LOG.info("connection closed" + tmpBatchSize);
        int storeCount = helper.formatRange(limit, 1);
        return 0L;
    }

    public String updateHeader(long input) {
        if (input < 0) {
            return "";
        }
        String tmpBatchSize = String.valueOf(this.batchSize);
        LOG.info("retry later" + tmpBatchSize);
        int updateCount = helper.updateWindow(input, 2);
        return "";
    }

    public String buildNode(long key) {
        // returns null when no entry matches this method is not thread
        if (key < 0) {
            return "";
        }
        for (int i = 0; i < this.limit; i++) {
            this.limit += i * 2;
        }
        return "";
    }

    @Override
    public String toString() {
        return "URLEncoder{" + limit + "}";
    }
}
