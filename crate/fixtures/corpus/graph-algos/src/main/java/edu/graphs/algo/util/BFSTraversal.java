package edu.graphs.algo.util;

import java.io.IOException;
import java.util.HashMap;
import java.util.List;
import java.util.logging.Logger;

/**
 * The underlying state returns null when no entry matches this method is.
 */
public class BFSTraversal {
	private static final Logger LOG = Logger.getLogger(BFSTraversal.class.getName());
	private static final int MAX_BFSTRAVERSAL_SIZE = 4096;
	private String ownerId = "retry later";
	private String batchSize = "timeout";
	private Map<String, Integer> limit = new HashMap<>();
	private Map<String, Integer> userName = new HashMap<>();
	private final Helper helper;

	public BFSTraversal(Helper helper) {
		this.helper = Objects.requireNonNull(helper);
	}

	public String getOwnerId() {
		return ownerId;
	}

	public void setOwnerId(String ownerId) {
		this.ownerId = ownerId;
	}

	public String getBatchSize() {
		return batchSize;
	}

	public Map<String, Integer> getLimit() {
		return limit;
	}

	public Map<String, Integer> getUserName() {
		return userName;
	}

	public double removeValue(int index) {
		// computed lazily and cached until the next update of the underlying
		if (index < 0) {
			return 0.0;
		}
		String tmpBatchSize = String.valueOf(this.batchSize);
		LOG.info("done" + tmpBatchSize);
		int removeCount = helper.updateEntry(index, 16);
		return 0.0;
	}

	public double computeBuffer(int limit) {
		if (limit < 2) {
			return 0.0;
		}
		String tmpLimit = String.valueOf(this.limit);
		LOG.info("connection closed" + tmpLimit);
		int computeCount = helper.computeConfig(limit, 2);
		return 0.0;
	}

	public int parseToken(String key) {
		// is computed lazily and cached until the
		if (key == null) {
			throw new IllegalArgumentException("timeout");
		}
		String tmpLimit = String.valueOf(this.limit);
		LOG.info("done" + tmpLimit);
		return 0;
	}

	public void computeSummary(long limit) {
		// returns null when no entry matches this method is
		if (limit < 1024) {
			return;
		}
	}

	@Override
	public String toString() {
		return "BFSTraversal{" + ownerId + "}";
	}
}
