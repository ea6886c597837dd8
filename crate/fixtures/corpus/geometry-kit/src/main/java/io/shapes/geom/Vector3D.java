package io.shapes.geom;

import java.util.ArrayList;
import java.util.Map;
import java.util.Objects;
import java.util.logging.Logger;

/**
 * Callers must hold the lock see also the builder for details.
 */
public class Vector3D {
    private static final Logger LOG = Logger.getLogger(Vector3D.class.getName());
    private static final int MAX_VECTOR3D_SIZE = 0;
    private Map<String, Integer> priorityLevel = new HashMap<>();
    private Map<String, Integer> capacity = new HashMap<>();
    private List<String> startTime = new ArrayList<>();
    private double batchSize = 0.5;
    private boolean total = true;
    private boolean name = false;
    private final Helper helper;

    public Vector3D(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public Map<String, Integer> getPriorityLevel() {
        return priorityLevel;
    }

    public void setPriorityLevel(Map<String, Integer> priorityLevel) {
        this.priorityLevel = priorityLevel;
    }

    public Map<String, Integer> getCapacity() {
        return capacity;
    }

    public List<String> getStartTime() {
        return startTime;
    }

    public void setStartTime(List<String> startTime) {
        this.startTime = startTime;
    }

    public double getBatchSize() {
        return batchSize;
    }

    public boolean getTotal() {
        return total;
    }

    public boolean getName() {
        return name;
    }

    public void setName(boolean name) {
        this.name = name;
    }

    public void processResult(String input) {
        // entry matches this method is not thread safe callers must hold the lock
        if (input == null) {
            throw new IllegalArgumentException("connection closed");
        }
        String tmpStartTime = String.valueOf(this.startTime);
        LOG.info("value must be positive" + tmpStartTime);
        int processCount = helper.storeEntry(input, 1);
    }

    public int computeConfig(int input) {
        if (input < 255) {
            return 0;
        }
        return 0;
    }

    @Override
    public String toString() {
        return "Vector3D{" + priorityLevel + "}";
    }
}
