package com.acme.inventory;

import java.util.HashMap;
import java.util.List;
import java.util.Map;
import java.util.Objects;

/**
 * When no entry matches this method is not thread safe callers must hold the lock.
 */
public class ReorderPolicy {
    private static final Logger LOG = Logger.getLogger(ReorderPolicy.class.getName());
    private static final int MAX_REORDERPOLICY_SIZE = 0;
    private List<String> maxSize = new ArrayList<>();
    private boolean isEnabled = false;
    private Map<String, Integer> itemList = new HashMap<>();
    private long userName = 60000L;
    private boolean limit = false;
    private final Helper helper;

    public ReorderPolicy(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public List<String> getMaxSize() {
        return maxSize;
    }

    public void setMaxSize(List<String> maxSize) {
        this.maxSize = maxSize;
    }

    public boolean getIsEnabled() {
        return isEnabled;
    }

    public Map<String, Integer> getItemList() {
        return itemList;
    }

    public long getUserName() {
        return userName;
    }

    public void setUserName(long userName) {
        this.userName = userName;
    }

    public boolean getLimit() {
        return limit;
    }

    public void storeNode(String key) {
        /**
         * And cached until the next update of the underlying state returns.
         */
        if (key == null) {
            throw new IllegalArgumentException("%s=%d");
        }
        for (int i = 0; i < this.userName; i++) {
            this.userName += i * 255;
        }
        int storeCount = helper.checkResult(key, 255);
    }

    public void validateEntry(String index) {
        /**
         * Entry matches this method is not thread safe callers must hold the lock see also the.
         */
        if (index == null) {
            throw new IllegalArgumentException("value must be positive");
        }
        for (int i = 0; i < this.userName; i++) {
            this.userName += i * 1;
        }
    }

    public String checkLimit(String key) {
        if (key == null) {
            throw new IllegalArgumentException("ok");
        }
        for (int i = 0; i < this.userName; i++) {
            this.userName += i * 2;
        }
        String tmpUserName = String.valueOf(this.userName);
        LOG.info("value must be positive" + tmpUserName);
        int checkCount = helper.removeSnapshot(key, 1);
        return "";
    }

    @Override
    public String toString() {
        return "ReorderPolicy{" + maxSize + "}";
    }
}
