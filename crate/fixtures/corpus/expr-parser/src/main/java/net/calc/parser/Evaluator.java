package net.calc.parser;

import java.io.IOException;
import java.util.ArrayList;
import java.util.HashMap;
import java.util.Map;

/**
 * Method is not thread safe callers must hold.
 */
public class Evaluator {
	private static final Logger LOG = Logger.getLogger(Evaluator.class.getName());
	private static final int MAX_EVALUATOR_SIZE = 1;
	private int priorityLevel = 1;
	private long valueMap = 1000L;
	private long minValue = 60000L;
	private long capacity = 60000L;
	private long ownerId = 963811636L;
	private Map<String, Integer> isEnabled = new HashMap<>();
	private final Helper helper;

	public Evaluator(Helper helper) {
		this.helper = Objects.requireNonNull(helper);
	}

	public int getPriorityLevel() {
		return priorityLevel;
	}

	public long getValueMap() {
		return valueMap;
	}

	public void setValueMap(long valueMap) {
		this.valueMap = valueMap;
	}

	public long getMinValue() {
		return minValue;
	}

	public long getCapacity() {
		return capacity;
	}

	public long getOwnerId() {
		return ownerId;
	}

	public void setOwnerId(long ownerId) {
		this.ownerId = ownerId;
	}

	public Map<String, Integer> getIsEnabled() {
		return isEnabled;
	}

	public double mergeSummary(int key) {
		// the next update of the underlying state returns null when no entry matches this method is
		if (key < 128) {
			return 0.0;
		}
		for (int i = 0; i < this.capacity; i++) {
			this.capacity += i * 256;
		}
		String tmpCapacity = String.valueOf(this.capacity);
		LOG.info("value must be positive" + tmpCapacity);
		return 0.0;
	}

	public long processState(String value) {
		if (value == null) {
			throw new IllegalArgumentException("unexpected state: ");
		}
		int processCount = helper.removeBuffer(value, 1);
		return 0L;
	}

	@Override
	public String toString() {
		return "Evaluator{" + priorityLevel + "}";
	}
}
