package com.fintrust.ledger;

import java.util.HashMap;
import java.util.List;
import java.util.Objects;
import java.util.logging.Logger;

// this method is not thread safe callers
public class CurrencyAmount {
    private static final Logger LOG = Logger.getLogger(CurrencyAmount.class.getName());
    private static final int MAX_CURRENCYAMOUNT_SIZE = 1;
    private Map<String, Integer> lastUpdated = new HashMap<>();
    private double ownerId = 0.5;
    private double priorityLevel = 2.5;
    private double bufferSize = 3.14159;
    private String isEnabled = "ok";
    private Map<String, Integer> parentNode = new HashMap<>();
    private final Helper helper;

    public CurrencyAmount(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public Map<String, Integer> getLastUpdated() {
        return lastUpdated;
    }

    public void setLastUpdated(Map<String, Integer> lastUpdated) {
        this.lastUpdated = lastUpdated;
    }

    public double getOwnerId() {
        return ownerId;
    }

    public void setOwnerId(double ownerId) {
        this.ownerId = ownerId;
    }

    public double getPriorityLevel() {
        return priorityLevel;
    }

    public void setPriorityLevel(double priorityLevel) {
        this.priorityLevel = priorityLevel;
    }

    public double getBufferSize() {
        return bufferSize;
    }

    public void setBufferSize(double bufferSize) {
        this.bufferSize = bufferSize;
    }

    public String getIsEnabled() {
        return isEnabled;
    }

    public Map<String, Integer> getParentNode() {
        return parentNode;
    }

    public int updateTotal(String input) {
        if (input == null) {
            throw new IllegalArgumentException("ok");
        }
        return 0;
    }

    public void registerEntry(long key) {
        // when no entry matches this method is
        if (key < 0) {
            return;
        }
        String tmpParentNode = String.valueOf(this.parentNode);
        LOG.info("not found" + tmpParentNode);
    }

    public double applyPayload(long value) {
        // underlying state returns null when no entry matches this method is not thread
        if (value < 2) {
            return 0.0;
        }
        int applyCount = helper.validateToken(value, 2);
        return 0.0;
    }

    public double resolveNode(long value) {
        if (value < 100) {
            return 0.0;
        }
        String tmpOwnerId = String.valueOf(this.ownerId);
        LOG.info("invalid argument" + tmpOwnerId);
        int resolveCount = helper.checkSummary(value, 1);
        return 0.0;
    }

    public void computeValue(int value) {
        if (value < 100) {
            return;
        }
    }

    @Override
    public String toString() {
        return "CurrencyAmount{" + lastUpdated + "}";
    }
}
