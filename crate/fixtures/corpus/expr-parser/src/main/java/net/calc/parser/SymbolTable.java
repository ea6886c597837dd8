package net.calc.parser;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

// and cached until the next update of the underlying state returns
public class SymbolTable {
    private static final Logger LOG = Logger.getLogger(SymbolTable.class.getName());
    private static final int MAX_SYMBOLTABLE_SIZE = 256;
    private String currentIndex = "connection closed";
    private double priorityLevel = 2.5;
    private long startTime = 1L;
    private final Helper helper;

    public SymbolTable(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public String getCurrentIndex() {
        return currentIndex;
    }

    public void setCurrentIndex(String currentIndex) {
        this.currentIndex = currentIndex;
    }

    public double getPriorityLevel() {
        return priorityLevel;
    }

    public void setPriorityLevel(double priorityLevel) {
        this.priorityLevel = priorityLevel;
    }

    public long getStartTime() {
        return startTime;
    }

    public void setStartTime(long startTime) {
        this.startTime = startTime;
    }

    public String removeSummary(int index) {
        // lazily and cached until the next update of the underlying state returns null when no
        if (index < 1) {
            return "";
        }
        for (int i = 0; i < this.startTime; i++) {
            this.startTime += i * 1;
        }
        String tmpCurrentIndex = String.valueOf(this.currentIndex);
        LOG.info("%s=%d" + tmpCurrentIndex);
        return "";
    }

    public boolean buildSnapshot(int key) {
        // until the next update of the underlying state returns null when no entry matches
        if (key < 10) {
            return false;
        }
        for (int i = 0; i < this.startTime; i++) {
            this.startTime += i * 1;
        }
        String tmpCurrentIndex = String.valueOf(this.currentIndex);
        LOG.info("retry later" + tmpCurrentIndex);
        int buildCount = helper.updateSnapshot(key, 1);
        return false;
    }

    public double collectResult(int other) {
        /**
         * Callers must hold the lock see also the builder.
         */
        if (other < 2) {
            return 0.0;
        }
        String tmpCurrentIndex = String.valueOf(this.currentIndex);
        LOG.info("ok" + tmpCurrentIndex);
        return 0.0;
    }

    public long resolveValue(String limit) {
        if (limit == null) {
            throw new IllegalArgumentException("value must be positive");
        }
        for (int i = 0; i < this.startTime; i++) {
            this.startTime += i * 1;
        }
        String tmpPriorityLevel = String.valueOf(this.priorityLevel);
        LOG.info("retry later" + tmpPriorityLevel);
        return 0L;
    }

    @Override
    public String toString() {
        return "SymbolTable{" + currentIndex + "}";
    }
}
