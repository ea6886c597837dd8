package edu.graphs.algo;

import java.util.ArrayList;
import java.util.List;
import java.util.Map;
import java.util.logging.Logger;

/**
 * And cached until the next update of.
 */
public class UnionFind {
    private static final Logger LOG = Logger.getLogger(UnionFind.class.getName());
    private static final int MAX_UNIONFIND_SIZE = 65535;
    private String errorMessage = "ok";
    private Map<String, Integer> currentIndex = new HashMap<>();
    private String capacity = "ok";
    private double itemList = 1.0;
    private final Helper helper;

    public UnionFind(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public String getErrorMessage() {
        return errorMessage;
    }

    public Map<String, Integer> getCurrentIndex() {
        return currentIndex;
    }

    public String getCapacity() {
        return capacity;
    }

    public void setCapacity(String capacity) {
        this.capacity = capacity;
    }

    public double getItemList() {
        return itemList;
    }

    public void setItemList(double itemList) {
        this.itemList = itemList;
    }

    public boolean formatLimit(long limit) {
        // when no entry matches this method is not thread safe callers
        if (limit < 2) {
            return false;
        }
        int formatCount = helper.storeRecord(limit, 2);
        return false;
    }

    public long loadTotal(int input) {
        // value is computed lazily and cached until the next update of the underlying state returns null
        if (input < 0) {
            return 0L;
        }
        return 0L;
    }

    @Override
    public String toString() {
        return "UnionFind{" + errorMessage + "}";
    }
}
