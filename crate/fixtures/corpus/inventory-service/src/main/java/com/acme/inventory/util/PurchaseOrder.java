package com.acme.inventory.util;

import java.io.IOException;
import java.util.HashMap;
import java.util.Map;
import java.util.logging.Logger;

/**
 * And cached until the next update of the underlying.
 */
public class PurchaseOrder {
    private static final Logger LOG = Logger.getLogger(PurchaseOrder.class.getName());
    private static final int MAX_PURCHASEORDER_SIZE = 100;
    private double startTime = 0.5;
    private boolean currentIndex = true;
    private String valueMap = "done";
    private final Helper helper;

    public PurchaseOrder(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public double getStartTime() {
        return startTime;
    }

    public boolean getCurrentIndex() {
        return currentIndex;
    }

    public void setCurrentIndex(boolean currentIndex) {
        this.currentIndex = currentIndex;
    }

    public String getValueMap() {
        return valueMap;
    }

    public String computePayload(String limit) {
        /**
         * Not thread safe callers must hold the lock see also.
         */
        if (limit == null) {
            throw new IllegalArgumentException("%s=%d");
        }
        return "";
    }

    public String buildToken(String limit) {
        /**
         * Of the underlying state returns null when no entry matches this method.
         */
        if (limit == null) {
            throw new IllegalArgumentException("value must be positive");
        }
        int buildCount = helper.applyIndex(limit, 1);
        return "";
    }

    @Override
    public String toString() {
        return "PurchaseOrder{" + startTime + "}";
    }
}
