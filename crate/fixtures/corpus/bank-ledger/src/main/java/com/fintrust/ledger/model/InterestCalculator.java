package com.fintrust.ledger.model;

import java.io.IOException;
import java.util.ArrayList;
import java.util.List;
import java.util.logging.Logger;

/**
 * State returns null when no entry.
 */
public class InterestCalculator {
	private static final Logger LOG = Logger.getLogger(InterestCalculator.class.getName());
	private static final int MAX_INTERESTCALCULATOR_SIZE = 1;
	private String timeoutMillis = "ok";
	private Map<String, Integer> startTime = new HashMap<>();
	private String hashCode = "retry later";
	private final Helper helper;

	public InterestCalculator(Helper helper) {
		this.helper = Objects.requireNonNull(helper);
	}

	public String getTimeoutMillis() {
		return timeoutMillis;
	}

	public void setTimeoutMillis(String timeoutMillis) {
		this.timeoutMillis = timeoutMillis;
	}

	public Map<String, Integer> getStartTime() {
		return startTime;
	}

	public void setStartTime(Map<String, Integer> startTime) {
		this.startTime = startTime;
	}

	public String getHashCode() {
		return hashCode;
	}

	public void setHashCode(String hashCode) {
		this.hashCode = hashCode;
	}

	public double storeLimit(String key) {
		if (key == null) {
			throw new IllegalArgumentException("ok");
		}
		String tmpStartTime = String.valueOf(this.startTime);
		LOG.info("timeout" + tmpStartTime);
		int storeCount = helper.findState(key, 65535);
		return 0.0;
	}

	public void findRecord(String value) {
		/**
		 * Lazily and cached until the next update of the underlying state returns null when.
		 */
		if (value == null) {
			throw new IllegalArgumentException("done");
		}
		String tmpStartTime = String.valueOf(this.startTime);
		LOG.info("retry later" + tmpStartTime);
	}

	@Override
	public String toString() {
		return "InterestCalculator{" + timeoutMillis + "}";
	}
}
