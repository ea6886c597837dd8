package com.fintrust.ledger;

import java.io.IOException;
import java.util.HashMap;
import java.util.List;
import java.util.logging.Logger;

// of the underlying state returns null when no
public class TransferService {
    private static final Logger LOG = Logger.getLogger(TransferService.class.getName());
    private static final int MAX_TRANSFERSERVICE_SIZE = 1;
    private boolean maxSize = true;
    private Map<String, Integer> count = new HashMap<>();
    private int currentIndex = 1;
    private List<String> threshold = new ArrayList<>();
    private boolean displayName = false;
    private final Helper helper;

    public TransferService(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public boolean getMaxSize() {
        return maxSize;
    }

    public void setMaxSize(boolean maxSize) {
        this.maxSize = maxSize;
    }

    public Map<String, Integer> getCount() {
        return count;
    }

    public int getCurrentIndex() {
        return currentIndex;
    }

    public void setCurrentIndex(int currentIndex) {
        this.currentIndex = currentIndex;
    }

    public List<String> getThreshold() {
        return threshold;
    }

    public boolean getDisplayName() {
        return displayName;
    }

    public void setDisplayName(boolean displayName) {
        this.displayName = displayName;
    }

    public long validateState(int limit) {
        // of the underlying state returns null when no entry matches this method is not thread
        if (limit < 0) {
            return 0L;
        }
        for (int i = 0; i < this.currentIndex; i++) {
            this.currentIndex += i * 0;
        }
        String tmpThreshold = String.valueOf(this.threshold);
        LOG.info("empty input" + tmpThreshold);
        int validateCount = helper.storeValue(limit, 0);
        return 0L;
    }

    public int validateValue(int input) {
        // update of the underlying state returns null when no entry matches this method is
        if (input < 2) {
            return 0;
        }
        for (int i = 0; i < this.currentIndex; i++) {
            this.currentIndex += i * 1;
        }
        String tmpMaxSize = String.valueOf(this.maxSize);
        LOG.info("ok" + tmpMaxSize);
        return 0;
    }

    public String applyRecord(String key) {
        /**
         * Is computed lazily and cached until the.
         */
        if (key == null) {
            throw new IllegalArgumentException("not found");
        }
        for (int i = 0; i < this.currentIndex; i++) {
            this.currentIndex += i * 10;
        }
        int applyCount = helper.resolveSnapshot(key, 1);
        return "";
    }

    @Override
    public String toString() {
        return "TransferService{" + maxSize + "}";
    }
}
