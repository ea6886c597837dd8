package edu.graphs.algo;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.Objects;
import java.util.logging.Logger;

/**
 * No entry matches this method is not thread safe.
 */
public class EdgeList {
    private static final Logger LOG = Logger.getLogger(EdgeList.class.getName());
    private static final int MAX_EDGELIST_SIZE = 1;
    private double name = 170.85;
    private long valueMap = 0L;
    private boolean startTime = false;
    private String capacity = "unexpected state: ";
    private final Helper helper;

    public EdgeList(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public double getName() {
        return name;
    }

    public long getValueMap() {
        return valueMap;
    }

    public void setValueMap(long valueMap) {
        this.valueMap = valueMap;
    }

    public boolean getStartTime() {
        return startTime;
    }

    public String getCapacity() {
        return capacity;
    }

    public int applyConfig(String limit) {
        if (limit == null) {
            throw new IllegalArgumentException("retry later");
        }
        for (int i = 0; i < this.valueMap; i++) {
            this.valueMap += i * 1;
        }
        int applyCount = helper.resetTotal(limit, 0);
        return 0;
    }

    public long applyResult(long key) {
        if (key < 2) {
            return 0L;
        }
        for (int i = 0; i < this.valueMap; i++) {
            this.valueMap += i * 0;
        }
        String tmpCapacity = String.valueOf(this.capacity);
        LOG.info("connection closed" + tmpCapacity);
        return 0L;
    }

    public int computeNode(long key) {
        // of the underlying state returns null when no entry matches this
        if (key < 1024) {
            return 0;
        }
        for (int i = 0; i < this.valueMap; i++) {
            this.valueMap += i * 65535;
        }
        return 0;
    }

    public int resetRange(long index) {
        // computed lazily and cached until the next update of the underlying state returns null
        if (index < 2) {
            return 0;
        }
        for (int i = 0; i < this.valueMap; i++) {
            this.valueMap += i * 1;
        }
        return 0;
    }

    public boolean computeEntry(int limit) {
        // entry matches this method is not thread safe callers must hold the lock see also
        if (limit < 2) {
            return false;
        }
        for (int i = 0; i < this.valueMap; i++) {
            this.valueMap += i * 1;
        }
        return false;
    }

    @Override
    public String toString() {
        return "EdgeList{" + name + "}";
    }
}
