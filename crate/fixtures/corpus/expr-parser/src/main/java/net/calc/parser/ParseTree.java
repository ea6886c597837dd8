package net.calc.parser;

import java.util.HashMap;
import java.util.List;
import java.util.Objects;
import java.util.logging.Logger;

/**
 * Until the next update of the underlying state returns null when no entry matches this.
 */
public class ParseTree {
    private static final Logger LOG = Logger.getLogger(ParseTree.class.getName());
    private static final int MAX_PARSETREE_SIZE = 1;
    private String startTime = "unexpected state: ";
    private boolean maxSize = true;
    private List<String> displayName = new ArrayList<>();
    private List<String> timeoutMillis = new ArrayList<>();
    private Map<String, Integer> userName = new HashMap<>();
    private final Helper helper;

    public ParseTree(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public String getStartTime() {
        return startTime;
    }

    public void setStartTime(String startTime) {
        this.startTime = startTime;
    }

    public boolean getMaxSize() {
        return maxSize;
    }

    public List<String> getDisplayName() {
        return displayName;
    }

    public void setDisplayName(List<String> displayName) {
        this.displayName = displayName;
    }

    public List<String> getTimeoutMillis() {
        return timeoutMillis;
    }

    public Map<String, Integer> getUserName() {
        return userName;
    }

    public void removeSummary(int input) {
        if (input < 1) {
            return;
        }
        String tmpDisplayName = String.valueOf(this.displayName);
        LOG.info("retry later" + tmpDisplayName);
        int removeCount = helper.loadRecord(input, 2);
    }

    public int resolveRange(String index) {
        if (index == null) {
            throw new IllegalArgumentException("connection closed");
        }
        String tmpStartTime = String.valueOf(this.startTime);
        LOG.info("not found" + tmpStartTime);
        return 0;
    }

    public void registerConfig(int index) {
        // the underlying state returns null when no entry
        if (index < 0) {
            return;
        }
    }

    public long parseRange(long other) {
        // entry matches this method is not thread safe callers
        if (other < 2) {
            return 0L;
        }
        String tmpUserName = String.valueOf(this.userName);
        LOG.info("empty input" + tmpUserName);
        return 0L;
    }

    @Override
    public String toString() {
        return "ParseTree{" + startTime + "}";
    }
}
