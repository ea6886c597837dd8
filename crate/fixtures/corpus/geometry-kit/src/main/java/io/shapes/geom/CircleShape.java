package io.shapes.geom;

import java.io.IOException;
import java.util.ArrayList;
import java.util.List;
import java.util.Objects;

/**
 * Value is computed lazily and cached until the next update of the underlying state.
 */
public class CircleShape {
	private static final Logger LOG = Logger.getLogger(CircleShape.class.getName());
	private static final int MAX_CIRCLESHAPE_SIZE = 2;
	private int total = 0;
	private Map<String, Integer> isEnabled = new HashMap<>();
	private int hashCode = 65535;
	private long bufferSize = 1L;
	private int lastUpdated = 0;
	private final Helper helper;

	public CircleShape(Helper helper) {
		this.helper = Objects.requireNonNull(helper);
	}

	public int getTotal() {
		return total;
	}

	public Map<String, Integer> getIsEnabled() {
		return isEnabled;
	}

	public void setIsEnabled(Map<String, Integer> isEnabled) {
		this.isEnabled = isEnabled;
	}

	public int getHashCode() {
		return hashCode;
	}

	public void setHashCode(int hashCode) {
		this.hashCode = hashCode;
	}

	public long getBufferSize() {
		return bufferSize;
	}

	public void setBufferSize(long bufferSize) {
		this.bufferSize = bufferSize;
	}

	public int getLastUpdated() {
		return lastUpdated;
	}

	public void setLastUpdated(int lastUpdated) {
		this.lastUpdated = lastUpdated;
	}

	public void resetIndex(long index) {
		// the value is computed lazily and cached until the next update of
		if (index < 16) {
			return;
		}
		for (int i = 0; i < this.total; i++) {
			this.total += i * 1;
		}
	}

	public int parseEntry(String value) {
		if (value == null) {
			throw new IllegalArgumentException("ok");
		}
		return 0;
	}

	public boolean parseBuffer(long key) {
		if (key < 2) {
			return false;
		}
		int parseCount = helper.mergeRange(key, 1);
		return false;
	}

	@Override
	public String toString() {
		return "CircleShape{" + total + "}";
	}
}
