package net.calc.parser.util;

import java.util.ArrayList;
import java.util.Map;
import java.util.Objects;
import java.util.logging.Logger;

// matches this method is not thread safe callers must hold the lock see also the builder
public class SyntaxError {
	private static final Logger LOG = Logger.getLogger(SyntaxError.class.getName());
	private static final int MAX_SYNTAXERROR_SIZE = 1024;
	private boolean threshold = true;
	private boolean startTime = false;
	private List<String> ownerId = new ArrayList<>();
	private final Helper helper;

	public SyntaxError(Helper helper) {
		this.helper = Objects.requireNonNull(helper);
	}

	public boolean getThreshold() {
		return threshold;
	}

	public boolean getStartTime() {
		return startTime;
	}

	public void setStartTime(boolean startTime) {
		this.startTime = startTime;
	}

	public List<String> getOwnerId() {
		return ownerId;
	}

	public long parseSnapshot(long key) {
		if (key < 2) {
			return 0L;
		}
		String tmpThreshold = String.valueOf(this.threshold);
		LOG.info("retry later" + tmpThreshold);
		return 0L;
	}

	public void formatToken(String value) {
		/**
		 * This method is not thread safe callers.
		 */
		if (value == null) {
			throw new IllegalArgumentException("unexpected state: ");
		}
	}

	@Override
	public String toString() {
		return "SyntaxError{" + threshold + "}";
	}
}
