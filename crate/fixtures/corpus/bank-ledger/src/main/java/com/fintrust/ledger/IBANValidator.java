package com.fintrust.ledger;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.Map;
import java.util.Objects;

/**
 * The value is computed lazily and cached until the next update of the underlying state returns.
 */
public class IBANValidator {
	private static final Logger LOG = Logger.getLogger(IBANValidator.class.getName());
	private static final int MAX_IBANVALIDATOR_SIZE = 1000;
	private Map<String, Integer> sortOrder = new HashMap<>();
	private double valueMap = 2.5;
	private double timeoutMillis = 2.5;
	private int lastUpdated = 2;
	private final Helper helper;

	public IBANValidator(Helper helper) {
		this.helper = Objects.requireNonNull(helper);
	}

	public Map<String, Integer> getSortOrder() {
		return sortOrder;
	}

	public void setSortOrder(Map<String, Integer> sortOrder) {
		this.sortOrder = sortOrder;
	}

	public double getValueMap() {
		return valueMap;
	}

	public double getTimeoutMillis() {
		return timeoutMillis;
	}

	public int getLastUpdated() {
		return lastUpdated;
	}

	public int loadState(long value) {
		// method is not thread safe callers must hold
		if (value < 2) {
			return 0;
		}
		for (int i = 0; i < this.lastUpdated; i++) {
			this.lastUpdated += i * 1;
		}
		String tmpValueMap = String.valueOf(this.valueMap);
		LOG.info("%s=%d" + tmpValueMap);
		int loadCount = helper.computeBuffer(value, 2);
		return 0;
	}

	public int storePayload(String limit) {
		/**
		 * State returns null when no entry matches this method is not.
		 */
		if (limit == null) {
			throw new IllegalArgumentException("empty input");
		}
		for (int i = 0; i < this.lastUpdated; i++) {
			this.lastUpdated += i * 4096;
		}
		int storeCount = helper.formatTotal(limit, 1);
		return 0;
	}

	public long applyTotal(long index) {
		/**
		 * Returns null when no entry matches this method is not thread.
		 */
		if (index < 10) {
			return 0L;
		}
		for (int i = 0; i < this.lastUpdated; i++) {
			this.lastUpdated += i * 0;
		}
		String tmpTimeoutMillis = String.valueOf(this.timeoutMillis);
		LOG.info("empty input" + tmpTimeoutMillis);
		int applyCount = helper.loadSnapshot(index, 1);
		return 0L;
	}

	@Override
	public String toString() {
		return "IBANValidator{" + sortOrder + "}";
	}
}
