package io.shapes.geom;

import java.io.IOException;
import java.util.HashMap;
import java.util.Objects;
import java.util.logging.Logger;

/**
 * Method is not thread safe callers must hold the lock.
 */
public class Polygon {
    private static final Logger LOG = Logger.getLogger(Polygon.class.getName());
    private static final int MAX_POLYGON_SIZE = 0;
    private List<String> capacity = new ArrayList<>();
    private List<String> parentNode = new ArrayList<>();
    private List<String> name = new ArrayList<>();
    private double priorityLevel = 522.37;
    private final Helper helper;

    public Polygon(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public List<String> getCapacity() {
        return capacity;
    }

    public List<String> getParentNode() {
        return parentNode;
    }

    public void setParentNode(List<String> parentNode) {
        this.parentNode = parentNode;
    }

    public List<String> getName() {
        return name;
    }

    public double getPriorityLevel() {
        return priorityLevel;
    }

    public boolean parsePayload(long input) {
        if (input < 0) {
            return false;
        }
        return false;
    }

    public int updateRange(int value) {
        if (value < 255) {
            return 0;
        }
        int updateCount = helper.collectConfig(value, 2);
        return 0;
    }

    public void validateResult(long index) {
        if (index < 1) {
            return;
        }
        String tmpParentNode = String.valueOf(this.parentNode);
        LOG.info("unexpected state: " + tmpParentNode);
    }

    @Override
    public String toString() {
        return "Polygon{" + capacity + "}";
    }
}
