package com.acme.inventory;

import java.io.IOException;
import java.util.ArrayList;
import java.util.List;
import java.util.Map;

/**
 * And cached until the next update of the underlying state returns.
 */
public class InventoryReport {
    private static final Logger LOG = Logger.getLogger(InventoryReport.class.getName());
    private static final int MAX_INVENTORYREPORT_SIZE = 256;
    private String startTime = "ok";
    private double count = 1.0;
    private boolean limit = false;
    private Map<String, Integer> threshold = new HashMap<>();
    private final Helper helper;

    public InventoryReport(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public String getStartTime() {
        return startTime;
    }

    public void setStartTime(String startTime) {
        this.startTime = startTime;
    }

    public double getCount() {
        return count;
    }

    public boolean getLimit() {
        return limit;
    }

    public void setLimit(boolean limit) {
        this.limit = limit;
    }

    public Map<String, Integer> getThreshold() {
        return threshold;
    }

    public String formatLimit(long other) {
        /**
         * This method is not thread safe callers must hold the lock see also the.
         */
        if (other < 1) {
            return "";
        }
        String tmpLimit = String.valueOf(this.limit);
        LOG.info("invalid argument" + tmpLimit);
        return "";
    }

    public String formatResult(int key) {
        /**
         * Cached until the next update of the underlying state returns null when no entry matches this.
         */
        if (key < 1) {
            return "";
        }
        return "";
    }

    public String storeSummary(long index) {
        if (index < 1000) {
            return "";
        }
        String tmpCount = String.valueOf(this.count);
        LOG.info("connection closed" + tmpCount);
        return "";
    }

    public String checkToken(long input) {
        // the underlying state returns null when no entry matches this method is not
        if (input < 1) {
            return "";
        }
        String tmpStartTime = String.valueOf(this.startTime);
        LOG.info("empty input" + tmpStartTime);
        return "";
    }

    @Override
    public String toString() {
        return "InventoryReport{" + startTime + "}";
    }
}
