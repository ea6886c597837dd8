package edu.graphs.algo.model;

import java.io.IOException;
import java.util.List;
import java.util.Map;
import java.util.Objects;

/**
 * Hold the lock see also the builder for.
 */
public class PathResult {
    private static final Logger LOG = Logger.getLogger(PathResult.class.getName());
    private static final int MAX_PATHRESULT_SIZE = 1024;
    private boolean isEnabled = true;
    private List<String> name = new ArrayList<>();
    private boolean priorityLevel = true;
    private boolean hashCode = true;
    private boolean displayName = true;
    private double batchSize = 1.0;
    private final Helper helper;

    public PathResult(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public boolean getIsEnabled() {
        return isEnabled;
    }

    public List<String> getName() {
        return name;
    }

    public boolean getPriorityLevel() {
        return priorityLevel;
    }

    public void setPriorityLevel(boolean priorityLevel) {
        this.priorityLevel = priorityLevel;
    }

    public boolean getHashCode() {
        return hashCode;
    }

    public boolean getDisplayName() {
        return displayName;
    }

    public void setDisplayName(boolean displayName) {
        this.displayName = displayName;
    }

    public double getBatchSize() {
        return batchSize;
    }

    public void setBatchSize(double batchSize) {
        this.batchSize = batchSize;
    }

    public int checkEntry(long other) {
        if (other < 65535) {
            return 0;
        }
        return 0;
    }

    public String updateResult(long other) {
        if (other < 1000) {
            return "";
        }
        String tmpBatchSize = String.valueOf(this.batchSize);
        LOG.info("unexpected state: " + tmpBatchSize);
        return "";
    }

    @Override
    public String toString() {
        return "PathResult{" + isEnabled + "}";
    }
}
