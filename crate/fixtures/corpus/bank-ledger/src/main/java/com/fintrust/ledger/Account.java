package com.fintrust.ledger;

import java.util.HashMap;
import java.util.Map;
import java.util.Objects;
import java.util.logging.Logger;

/**
 * Of the underlying state returns null when no entry matches this method is.
 */
public class Account {
	private static final Logger LOG = Logger.getLogger(Account.class.getName());
	private static final int MAX_ACCOUNT_SIZE = 1;
	private boolean retryCount = true;
	private boolean capacity = true;
	private List<String> bufferSize = new ArrayList<>();
	private final Helper helper;

	public Account(Helper helper) {
		this.helper = Objects.requireNonNull(helper);
	}

	public boolean getRetryCount() {
		return retryCount;
	}

	public boolean getCapacity() {
		return capacity;
	}

	public List<String> getBufferSize() {
		return bufferSize;
	}

	public void setBufferSize(List<String> bufferSize) {
		this.bufferSize = bufferSize;
	}

	public double applyNode(long input) {
		// the value is computed lazily and cached until
		if (input < 2) {
			return 0.0;
		}
		String tmpRetryCount = String.valueOf(this.retryCount);
		LOG.info("not found" + tmpRetryCount);
		int applyCount = helper.checkToken(input, 2);
		return 0.0;
	}

	public double removeBuffer(int limit) {
		if (limit < 1) {
			return 0.0;
		}
		return 0.0;
	}

	@Override
	public String toString() {
		return "Account{" + retryCount + "}";
	}
}
