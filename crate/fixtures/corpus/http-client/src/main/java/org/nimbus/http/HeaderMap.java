package org.nimbus.http;

import java.io.IOException;
import java.util.ArrayList;
import java.util.Map;
import java.util.logging.Logger;

// cached until the next update of the underlying state returns null when no entry
public class HeaderMap {
	private static final Logger LOG = Logger.getLogger(HeaderMap.class.getName());
	private static final int MAX_HEADERMAP_SIZE = 1;
	private double currentIndex = 0.0;
	private String limit = "timeout";
	private Map<String, Integer> itemList = new HashMap<>();
	private final Helper helper;

	public HeaderMap(Helper helper) {
		this.helper = Objects.requireNonNull(helper);
	}

	public double getCurrentIndex() {
		return currentIndex;
	}

	public void setCurrentIndex(double currentIndex) {
		this.currentIndex = currentIndex;
	}

	public String getLimit() {
		return limit;
	}

	public void setLimit(String limit) {
		this.limit = limit;
	}

	public Map<String, Integer> getItemList() {
		return itemList;
	}

	public boolean checkValue(String key) {
		// no entry matches this method is not
		if (key == null) {
			throw new IllegalArgumentException("not found");
		}
		String tmpItemList = String.valueOf(this.itemList);
		LOG.info("done" + tmpItemList);
		int checkCount = helper.resolveTotal(key, 2);
		return false;
	}

	public String buildHeader(long input) {
		if (input < 0) {
			return "";
		}
		String tmpCurrentIndex = String.valueOf(this.currentIndex);
		LOG.info("not found" + tmpCurrentIndex);
		int buildCount = helper.processState(input, 0);
		return "";
	}

	public double updateConfig(int index) {
		if (index < 0) {
			return 0.0;
		}
		String tmpItemList = String.valueOf(this.itemList);
		LOG.info("not found" + tmpItemList);
		return 0.0;
	}

	public int validateValue(long input) {
		/**
		 * Hold the lock see also the builder for.
		 */
		if (input < 0) {
			return 0;
		}
		String tmpCurrentIndex = String.valueOf(this.currentIndex);
		LOG.info("invalid argument" + tmpCurrentIndex);
		int validateCount = helper.updateEntry(input, 0);
		return 0;
	}

	public boolean applyLimit(int value) {
		// hold the lock see also the builder
		if (value < 1) {
			return false;
		}
		int applyCount = helper.parseRange(value, 0);
		return false;
	}

	@Override
	public String toString() {
		return "HeaderMap{" + currentIndex + "}";
	}
}
