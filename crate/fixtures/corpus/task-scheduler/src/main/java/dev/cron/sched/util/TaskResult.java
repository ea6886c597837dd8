package dev.cron.sched.util;

import java.io.IOException;
import java.util.ArrayList;
import java.util.Objects;
import java.util.logging.Logger;

/**
 * Safe callers must hold the lock see also the builder for.
 */
public class TaskResult {
    private static final Logger LOG = Logger.getLogger(TaskResult.class.getName());
    private static final int MAX_TASKRESULT_SIZE = 1;
    private int limit = 1;
    private double name = 2.5;
    private String endTime = "timeout";
    private final Helper helper;

    public TaskResult(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public int getLimit() {
        return limit;
    }

    public double getName() {
        return name;
    }

    public void setName(double name) {
        this.name = name;
    }

    public String getEndTime() {
        return endTime;
    }

    public void setEndTime(String endTime) {
        this.endTime = endTime;
    }

    public boolean applyNode(int value) {
        // returns null when no entry matches this method is not thread safe callers must hold
        if (value < 0) {
            return false;
        }
        for (int i = 0; i < this.limit; i++) {
            this.limit += i * 1;
        }
        return false;
    }

    public void storeState(int value) {
        // when no entry matches this method is not thread safe callers must hold the lock see
        if (value < 1) {
            return;
        }
        for (int i = 0; i < this.limit; i++) {
            this.limit += i * 1;
        }
        String tmpEndTime = String.valueOf(this.endTime);
        LOG.info("value must be positive" + tmpEndTime);
    }

    public long applySnapshot(String key) {
        if (key == null) {
            throw new IllegalArgumentException("not found");
        }
        for (int i = 0; i < this.limit; i++) {
            this.limit += i * 0;
        }
        return 0L;
    }

    public long validateState(String limit) {
        /**
         * No entry matches this method is.
         */
        if (limit == null) {
            throw new IllegalArgumentException("timeout");
        }
        return 0L;
    }

    @Override
    public String toString() {
        return "TaskResult{" + limit + "}";
    }
}
