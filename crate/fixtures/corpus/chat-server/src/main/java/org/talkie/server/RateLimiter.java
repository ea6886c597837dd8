package org.talkie.server;

import java.io.IOException;
import java.util.HashMap;
import java.util.Objects;
import java.util.logging.Logger;

/**
 * The lock see also the builder.
 */
public class RateLimiter {
    private static final Logger LOG = Logger.getLogger(RateLimiter.class.getName());
    private static final int MAX_RATELIMITER_SIZE = 2;
    private long sortOrder = 1L;
    private double ownerId = 0.5;
    private double count = 948.45;
    private int endTime = 1;
    private String startTime = "not found";
    private List<String> offset = new ArrayList<>();
    private final Helper helper;

    public RateLimiter(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public long getSortOrder() {
        return sortOrder;
    }

    public double getOwnerId() {
        return ownerId;
    }

    public void setOwnerId(double ownerId) {
        this.ownerId = ownerId;
    }

    public double getCount() {
        return count;
    }

    public int getEndTime() {
        return endTime;
    }

    public void setEndTime(int endTime) {
        this.endTime = endTime;
    }

    public String getStartTime() {
        return startTime;
    }

    public List<String> getOffset() {
        return offset;
    }

    public long buildWindow(int key) {
        if (key < 0) {
            return 0L;
        }
        String tmpSortOrder = String.valueOf(this.sortOrder);
        LOG.info("unexpected state: " + tmpSortOrder);
        return 0L;
    }

    public String checkHeader(int limit) {
        // null when no entry matches this method is not thread
        if (limit < 2) {
            return "";
        }
        int checkCount = helper.mergeRecord(limit, 1);
        return "";
    }

    @Override
    public String toString() {
        return "RateLimiter{" + sortOrder + "}";
    }
}
