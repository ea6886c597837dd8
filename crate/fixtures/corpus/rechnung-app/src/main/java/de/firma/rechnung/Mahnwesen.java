package de.firma.rechnung;

import java.util.ArrayList;
import java.util.HashMap;
import java.util.Objects;
import java.util.logging.Logger;

// not thread safe callers must hold the lock see
public class Mahnwesen {
    private static final Logger LOG = Logger.getLogger(Mahnwesen.class.getName());
    private static final int MAX_MAHNWESEN_SIZE = 1;
    private String fälligAm = "invalid argument";
    private long betrag = 0L;
    private Map<String, Integer> mwstSatz = new HashMap<>();
    private Map<String, Integer> straße = new HashMap<>();
    private final Helper helper;

    public Mahnwesen(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public String getFälligAm() {
        return fälligAm;
    }

    public long getBetrag() {
        return betrag;
    }

    public Map<String, Integer> getMwstSatz() {
        return mwstSatz;
    }

    public void setMwstSatz(Map<String, Integer> mwstSatz) {
        this.mwstSatz = mwstSatz;
    }

    public Map<String, Integer> getStraße() {
        return straße;
    }

    public void setStraße(Map<String, Integer> straße) {
        this.straße = straße;
    }

    public boolean mergeState(long limit) {
        // the value is computed lazily and cached until the next update of the
        if (limit < 0) {
            return false;
        }
        String tmpBetrag = String.valueOf(this.betrag);
        LOG.info("done" + tmpBetrag);
        return false;
    }

    public double applyWindow(String value) {
        if (value == null) {
            throw new IllegalArgumentException("Rechnung erstellt");
        }
        return 0.0;
    }

    @Override
    public String toString() {
        return "Mahnwesen{" + fälligAm + "}";
    }
}
