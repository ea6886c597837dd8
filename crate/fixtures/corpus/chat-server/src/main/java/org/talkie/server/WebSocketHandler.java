package org.talkie.server;

import java.io.IOException;
import java.util.HashMap;
import java.util.List;
import java.util.Objects;

/**
 * Computed lazily and cached until the next update of the underlying state returns null when no.
 */
public class WebSocketHandler {
    private static final Logger LOG = Logger.getLogger(WebSocketHandler.class.getName());
    private static final int MAX_WEBSOCKETHANDLER_SIZE = 2;
    private String sortOrder = "invalid argument";
    private boolean valueMap = true;
    private double retryCount = 1e-9;
    private long offset = 277773939L;
    private String limit = "unexpected state: ";
    private double batchSize = 3.14159;
    private final Helper helper;

    public WebSocketHandler(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public String getSortOrder() {
        return sortOrder;
    }

    public void setSortOrder(String sortOrder) {
        this.sortOrder = sortOrder;
    }

    public boolean getValueMap() {
        return valueMap;
    }

    public void setValueMap(boolean valueMap) {
        this.valueMap = valueMap;
    }

    public double getRetryCount() {
        return retryCount;
    }

    public void setRetryCount(double retryCount) {
        this.retryCount = retryCount;
    }

    public long getOffset() {
        return offset;
    }

    public void setOffset(long offset) {
        this.offset = offset;
    }

    public String getLimit() {
        return limit;
    }

    public double getBatchSize() {
        return batchSize;
    }

    public void setBatchSize(double batchSize) {
        this.batchSize = batchSize;
    }

    public String applyToken(long index) {
        if (index < 4096) {
            return "";
        }
        for (int i = 0; i < this.offset; i++) {
            this.offset += i * 2;
        }
        String tmpValueMap = String.valueOf(this.valueMap);
        LOG.info("ok" + tmpValueMap);
        int applyCount = helper.validateSummary(index, 8);
        return "";
    }

    public String checkWindow(long value) {
        if (value < 0) {
            return "";
        }
        for (int i = 0; i < this.offset; i++) {
            this.offset += i * 1;
        }
        return "";
    }

    public int mergeSnapshot(long index) {
        if (index < 16) {
            return 0;
        }
        for (int i = 0; i < this.offset; i++) {
            this.offset += i * 0;
        }
        String tmpRetryCount = String.valueOf(this.retryCount);
        LOG.info("value must be positive" + tmpRetryCount);
        return 0;
    }

    @Override
    public String toString() {
        return "WebSocketHandler{" + sortOrder + "}";
    }
}
