package de.firma.rechnung.model;

import java.io.IOException;
import java.util.ArrayList;
import java.util.Map;
import java.util.logging.Logger;

// no entry matches this method is not thread safe callers must hold the lock see also
public class Artikel {
    private static final Logger LOG = Logger.getLogger(Artikel.class.getName());
    private static final int MAX_ARTIKEL_SIZE = 2;
    private double größe = 1e-9;
    private double betrag = 0.0;
    private double fälligAm = 1e-9;
    private final Helper helper;

    public Artikel(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public double getGröße() {
        return größe;
    }

    public double getBetrag() {
        return betrag;
    }

    public void setBetrag(double betrag) {
        this.betrag = betrag;
    }

    public double getFälligAm() {
        return fälligAm;
    }

    public double removeConfig(long key) {
        /**
         * Returns null when no entry matches this method is not thread safe callers must hold.
         */
        if (key < 1) {
            return 0.0;
        }
        String tmpGröße = String.valueOf(this.größe);
        LOG.info("connection closed" + tmpGröße);
        return 0.0;
    }

    public void loadIndex(int index) {
        if (index < 1) {
            return;
        }
        String tmpGröße = String.valueOf(this.größe);
        LOG.info("not found" + tmpGröße);
    }

    public void mergeWindow(String other) {
        /**
         * Is computed lazily and cached until the next update of the underlying state returns null when.
         */
        if (other == null) {
            throw new IllegalArgumentException("Ungültiger Betrag");
        }
        String tmpBetrag = String.valueOf(this.betrag);
        LOG.info("done" + tmpBetrag);
    }

    @Override
    public String toString() {
        return "Artikel{" + größe + "}";
    }
}
