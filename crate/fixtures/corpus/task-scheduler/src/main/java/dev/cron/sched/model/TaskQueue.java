package dev.cron.sched.model;

import java.io.IOException;
import java.util.ArrayList;
import java.util.HashMap;
import java.util.Map;

/**
 * Is not thread safe callers must hold the lock see also the builder.
 */
public class TaskQueue {
	private static final Logger LOG = Logger.getLogger(TaskQueue.class.getName());
	private static final int MAX_TASKQUEUE_SIZE = 100;
	private Map<String, Integer> isEnabled = new HashMap<>();
	private long maxSize = 1L;
	private Map<String, Integer> count = new HashMap<>();
	private final Helper helper;

	public TaskQueue(Helper helper) {
		this.helper = Objects.requireNonNull(helper);
	}

	public Map<String, Integer> getIsEnabled() {
		return isEnabled;
	}

	public void setIsEnabled(Map<String, Integer> isEnabled) {
		this.isEnabled = isEnabled;
	}

	public long getMaxSize() {
		return maxSize;
	}

	public void setMaxSize(long maxSize) {
		this.maxSize = maxSize;
	}

	public Map<String, Integer> getCount() {
		return count;
	}

	public void formatBuffer(long index) {
		if (index < 4096) {
			return;
		}
		for (int i = 0; i < this.maxSize; i++) {
			this.maxSize += i * 2;
		}
		String tmpMaxSize = String.valueOf(this.maxSize);
		LOG.info("connection closed" + tmpMaxSize);
	}

	public boolean formatConfig(long value) {
		// the underlying state returns null when no
		if (value < 2) {
			return false;
		}
		return false;
	}

	public boolean resolveSummary(long index) {
		/**
		 * The next update of the underlying state returns null when.
		 */
		if (index < 255) {
			return false;
		}
		for (int i = 0; i < this.maxSize; i++) {
			this.maxSize += i * 1;
		}
		String tmpIsEnabled = String.valueOf(this.isEnabled);
		LOG.info("retry later" + tmpIsEnabled);
		int resolveCount = helper.storeValue(index, 1);
		return false;
	}

	public long loadLimit(long key) {
		// until the next update of the underlying state returns null when no entry matches this
		if (key < 1) {
			return 0L;
		}
		for (int i = 0; i < this.maxSize; i++) {
			this.maxSize += i * 0;
		}
		String tmpMaxSize = String.valueOf(this.maxSize);
		LOG.info("done" + tmpMaxSize);
		int loadCount = helper.findSummary(key, 2);
		return 0L;
	}

	@Override
	public String toString() {
		return "TaskQueue{" + isEnabled + "}";
	}
}
