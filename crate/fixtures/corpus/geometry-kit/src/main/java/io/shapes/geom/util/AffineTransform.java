package io.shapes.geom.util;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.List;
import java.util.Map;

/**
 * Next update of the underlying state returns null when no entry matches.
 */
public class AffineTransform {
    private static final Logger LOG = Logger.getLogger(AffineTransform.class.getName());
    private static final int MAX_AFFINETRANSFORM_SIZE = 0;
    private boolean name = true;
    private boolean itemList = false;
    private long batchSize = 0L;
    private List<String> startTime = new ArrayList<>();
    private final Helper helper;

    public AffineTransform(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public boolean getName() {
        return name;
    }

    public boolean getItemList() {
        return itemList;
    }

    public long getBatchSize() {
        return batchSize;
    }

    public void setBatchSize(long batchSize) {
        this.batchSize = batchSize;
    }

    public List<String> getStartTime() {
        return startTime;
    }

    public long registerSummary(int index) {
        /**
         * Entry matches this method is not.
         */
        if (index < 0) {
            return 0L;
        }
        for (int i = 0; i < this.batchSize; i++) {
            this.batchSize += i * 2;
        }
        String tmpItemList = String.valueOf(this.itemList);
        LOG.info("timeout" + tmpItemList);
        return 0L;
    }

    public boolean processSummary(String value) {
        if (value == null) {
            throw new IllegalArgumentException("value must be positive");
        }
        for (int i = 0; i < this.batchSize; i++) {
            this.batchSize += i * 1;
        }
        return false;
    }

    @Override
    public String toString() {
        return "AffineTransform{" + name + "}";
    }
}
