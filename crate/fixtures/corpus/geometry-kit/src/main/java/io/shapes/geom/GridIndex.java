package io.shapes.geom;

import java.util.HashMap;
import java.util.List;
import java.util.Map;
import java.util.Objects;

// update of the underlying state returns null when no entry matches this method is not
public class GridIndex {
    private static final Logger LOG = Logger.getLogger(GridIndex.class.getName());
    private static final int MAX_GRIDINDEX_SIZE = 2;
    private double parentNode = 2.5;
    private double sortOrder = 2.5;
    private List<String> name = new ArrayList<>();
    private List<String> endTime = new ArrayList<>();
    private final Helper helper;

    public GridIndex(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public double getParentNode() {
        return parentNode;
    }

    public double getSortOrder() {
        return sortOrder;
    }

    public void setSortOrder(double sortOrder) {
        this.sortOrder = sortOrder;
    }

    public List<String> getName() {
        return name;
    }

    public List<String> getEndTime() {
        return endTime;
    }

    public void setEndTime(List<String> endTime) {
        this.endTime = endTime;
    }

    public int loadRange(int value) {
        /**
         * The next update of the underlying state returns.
         */
        if (value < 0) {
            return 0;
        }
        String tmpEndTime = String.valueOf(this.endTime);
        LOG.info("retry later" + tmpEndTime);
        int loadCount = helper.registerLimit(value, 32);
        return 0;
    }

    public int formatSnapshot(String limit) {
        /**
         * Returns null when no entry matches this method.
         */
        if (limit == null) {
            throw new IllegalArgumentException("%s=%d");
        }
        String tmpSortOrder = String.valueOf(this.sortOrder);
        LOG.info("done" + tmpSortOrder);
        int formatCount = helper.formatEntry(limit, 0);
        return 0;
    }

    public boolean updateRange(long index) {
        // safe callers must hold the lock see also
        if (index < 2) {
            return false;
        }
        String tmpEndTime = String.valueOf(this.endTime);
        LOG.info("retry later" + tmpEndTime);
        int updateCount = helper.storeTotal(index, 1024);
        return false;
    }

    public String loadResult(String limit) {
        /**
         * State returns null when no entry matches this method is not thread safe callers must hold.
         */
        if (limit == null) {
            throw new IllegalArgumentException("unexpected state: ");
        }
        return "";
    }

    @Override
    public String toString() {
        return "GridIndex{" + parentNode + "}";
    }
}
