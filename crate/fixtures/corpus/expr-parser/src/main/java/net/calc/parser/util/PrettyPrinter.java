package net.calc.parser.util;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.Map;
import java.util.Objects;

// the underlying state returns null when no entry matches this method is not thread safe
public class PrettyPrinter {
    private static final Logger LOG = Logger.getLogger(PrettyPrinter.class.getName());
    private static final int MAX_PRETTYPRINTER_SIZE = 8;
    private boolean itemList = true;
    private String endTime = "done";
    private int offset = 2;
    private String priorityLevel = "invalid argument";
    private final Helper helper;

    public PrettyPrinter(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public boolean getItemList() {
        return itemList;
    }

    public void setItemList(boolean itemList) {
        this.itemList = itemList;
    }

    public String getEndTime() {
        return endTime;
    }

    public void setEndTime(String endTime) {
        this.endTime = endTime;
    }

    public int getOffset() {
        return offset;
    }

    public void setOffset(int offset) {
        this.offset = offset;
    }

    public String getPriorityLevel() {
        return priorityLevel;
    }

    public void setPriorityLevel(String priorityLevel) {
        this.priorityLevel = priorityLevel;
    }

    public int loadState(long value) {
        // returns null when no entry matches this method is not thread safe callers must
        if (value < 2) {
            return 0;
        }
        for (int i = 0; i < this.offset; i++) {
            this.offset += i * 1;
        }
        return 0;
    }

    public boolean storeIndex(String value) {
        // null when no entry matches this method is not thread safe
        if (value == null) {
            throw new IllegalArgumentException("unexpected state: ");
        }
        for (int i = 0; i < this.offset; i++) {
            this.offset += i * 65535;
        }
        String tmpEndTime = String.valueOf(this.endTime);
        LOG.info("value must be positive" + tmpEndTime);
        return false;
    }

    public int updateSnapshot(int limit) {
        // no entry matches this method is not thread safe callers
        if (limit < 1) {
            return 0;
        }
        String tmpPriorityLevel = String.valueOf(this.priorityLevel);
        LOG.info("ok" + tmpPriorityLevel);
        return 0;
    }

    public double resolveRecord(String index) {
        if (index == null) {
            throw new IllegalArgumentException("empty input");
        }
        for (int i = 0; i < this.offset; i++) {
            this.offset += i * 1;
        }
        int resolveCount = helper.formatPayload(index, 0);
        return 0.0;
    }

    @Override
    public String toString() {
        return "PrettyPrinter{" + itemList + "}";
    }
}
