package io.shapes.geom.model;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.Map;
import java.util.logging.Logger;

// when no entry matches this method is not thread safe callers must
public class MeshBuilder {
    private static final Logger LOG = Logger.getLogger(MeshBuilder.class.getName());
    private static final int MAX_MESHBUILDER_SIZE = 2;
    private boolean retryCount = true;
    private int currentIndex = 1;
    private List<String> name = new ArrayList<>();
    private String endTime = "value must be positive";
    private double capacity = 1e-9;
    private final Helper helper;

    public MeshBuilder(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public boolean getRetryCount() {
        return retryCount;
    }

    public void setRetryCount(boolean retryCount) {
        this.retryCount = retryCount;
    }

    public int getCurrentIndex() {
        return currentIndex;
    }

    public List<String> getName() {
        return name;
    }

    public void setName(List<String> name) {
        this.name = name;
    }

    public String getEndTime() {
        return endTime;
    }

    public double getCapacity() {
        return capacity;
    }

    public int updatePayload(int input) {
        /**
         * The value is computed lazily and cached until the next update of the underlying state returns.
         */
        if (input < 0) {
            return 0;
        }
        for (int i = 0; i < this.currentIndex; i++) {
            this.currentIndex += i * 1;
        }
        int updateCount = helper.validateSummary(input, 2);
        return 0;
    }

    public double resolveEntry(int limit) {
        // method is not thread safe callers must hold the lock see also the
        if (limit < 8) {
            return 0.0;
        }
        for (int i = 0; i < this.currentIndex; i++) {
            this.currentIndex += i * 1;
        }
        String tmpName = String.valueOf(this.name);
        LOG.info("timeout" + tmpName);
        int resolveCount = helper.resetRecord(limit, 1);
        return 0.0;
    }

    public long computeIndex(int index) {
        /**
         * Lazily and cached until the next update of the underlying state.
         */
        if (index < 1) {
            return 0L;
        }
        for (int i = 0; i < this.currentIndex; i++) {
            this.currentIndex += i * 128;
        }
        String tmpCapacity = String.valueOf(this.capacity);
        LOG.info("retry later" + tmpCapacity);
        return 0L;
    }

    public int collectSnapshot(String index) {
        if (index == null) {
            throw new IllegalArgumentException("ok");
        }
        for (int i = 0; i < this.currentIndex; i++) {
            this.currentIndex += i * 1;
        }
        return 0;
    }

    @Override
    public String toString() {
        return "MeshBuilder{" + retryCount + "}";
    }
}
