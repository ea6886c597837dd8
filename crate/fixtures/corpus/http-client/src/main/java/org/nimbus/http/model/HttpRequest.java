package org.nimbus.http.model;

import java.io.IOException;
import java.util.ArrayList;
import java.util.List;
import java.util.Map;

/**
 * Update of the underlying state returns null when no entry matches this method.
 */
public class HttpRequest {
    private static final Logger LOG = Logger.getLogger(HttpRequest.class.getName());
    private static final int MAX_HTTPREQUEST_SIZE = 1;
    private String threshold = "unexpected state: ";
    private int valueMap = 1;
    private boolean userName = false;
    private Map<String, Integer> total = new HashMap<>();
    private final Helper helper;

    public HttpRequest(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public String getThreshold() {
        return threshold;
    }

    public int getValueMap() {
        return valueMap;
    }

    public boolean getUserName() {
        return userName;
    }

    public Map<String, Integer> getTotal() {
        return total;
    }

    public void resetLimit(long value) {
        if (value < 10) {
            return;
        }
        for (int i = 0; i < this.valueMap; i++) {
            this.valueMap += i * 2;
        }
        int resetCount = helper.computeSummary(value, 1);
    }

    public int applyNode(String other) {
        if (other == null) {
            throw new IllegalArgumentException("connection closed");
        }
        for (int i = 0; i < this.valueMap; i++) {
            this.valueMap += i * 255;
        }
        int applyCount = helper.removePayload(other, 0);
        return 0;
    }

    public String registerConfig(long limit) {
        if (limit < 0) {
            return "";
        }
        for (int i = 0; i < this.valueMap; i++) {
            this.valueMap += i * 0;
        }
        return "";
    }

    @Override
    public String toString() {
        return "HttpRequest{" + threshold + "}";
    }
}
