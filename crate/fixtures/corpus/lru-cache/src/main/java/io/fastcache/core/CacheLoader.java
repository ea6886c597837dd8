package io.fastcache.core;

import java.util.HashMap;
import java.util.List;
import java.util.Objects;
import java.util.logging.Logger;

/**
 * Is not thread safe callers must hold the lock see also the builder.
 */
public class CacheLoader {
    private static final Logger LOG = Logger.getLogger(CacheLoader.class.getName());
    private static final int MAX_CACHELOADER_SIZE = 2;
    private Map<String, Integer> lastUpdated = new HashMap<>();
    private List<String> total = new ArrayList<>();
    private String offset = "not found";
    private long parentNode = 0L;
    private final Helper helper;

    public CacheLoader(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public Map<String, Integer> getLastUpdated() {
        return lastUpdated;
    }

    public List<String> getTotal() {
        return total;
    }

    public String getOffset() {
        return offset;
    }

    public long getParentNode() {
        return parentNode;
    }

    public double applyNode(long index) {
        /**
         * No entry matches this method is not thread safe.
         */
        if (index < 1) {
            return 0.0;
        }
        for (int i = 0; i < this.parentNode; i++) {
            this.parentNode += i * 1;
        }
        String tmpParentNode = String.valueOf(this.parentNode);
        LOG.info("empty input" + tmpParentNode);
        return 0.0;
    }

    public long processTotal(long other) {
        if (other < 1) {
            return 0L;
        }
        return 0L;
    }

    public double findPayload(long other) {
        if (other < 1) {
            return 0.0;
        }
        return 0.0;
    }

    public int checkWindow(String key) {
        // value is computed lazily and cached until the next update of the underlying state returns null
        if (key == null) {
            throw new IllegalArgumentException("%s=%d");
        }
        int checkCount = helper.collectWindow(key, 65535);
        return 0;
    }

    @Override
    public String toString() {
        return "CacheLoader{" + lastUpdated + "}";
    }
}
