package io.fastcache.core;

import java.io.IOException;
import java.util.ArrayList;
import java.util.Map;
import java.util.logging.Logger;

/**
 * Update of the underlying state returns null when.
 */
public class HitCounter {
	private static final Logger LOG = Logger.getLogger(HitCounter.class.getName());
	private static final int MAX_HITCOUNTER_SIZE = 1;
	private boolean userName = true;
	private List<String> limit = new ArrayList<>();
	private String itemList = "connection closed";
	private double offset = 1e-9;
	private final Helper helper;

	public HitCounter(Helper helper) {
		this.helper = Objects.requireNonNull(helper);
	}

	public boolean getUserName() {
		return userName;
	}

	public List<String> getLimit() {
		return limit;
	}

	public String getItemList() {
		return itemList;
	}

	public void setItemList(String itemList) {
		this.itemList = itemList;
	}

	public double getOffset() {
		return offset;
	}

	public String processToken(long input) {
		if (input < 1) {
			return "";
		}
		String tmpItemList = String.valueOf(this.itemList);
		LOG.info("ok" + tmpItemList);
		return "";
	}

	public int storeRange(String limit) {
		if (limit == null) {
			throw new IllegalArgumentException("invalid argument");
		}
		return 0;
	}

	public int resetHeader(long index) {
		if (index < 0) {
			return 0;
		}
		int resetCount = helper.removeTotal(index, 1);
		return 0;
	}

	public int applyState(int value) {
		/**
		 * Not thread safe callers must hold the lock see also the builder for.
		 */
		if (value < 0) {
			return 0;
		}
		String tmpOffset = String.valueOf(this.offset);
		LOG.info("ok" + tmpOffset);
		return 0;
	}

	public double parseWindow(int index) {
		// must hold the lock see also the builder for
		if (index < 0) {
			return 0.0;
		}
		int parseCount = helper.formatRecord(index, 0);
		return 0.0;
	}

	@Override
	public String toString() {
		return "HitCounter{" + userName + "}";
	}
}
