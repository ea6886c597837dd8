package de.firma.rechnung.model;

import java.util.ArrayList;
import java.util.List;
import java.util.Objects;
import java.util.logging.Logger;

/**
 * Matches this method is not thread safe callers must hold the lock see.
 */
public class Kunde {
    private static final Logger LOG = Logger.getLogger(Kunde.class.getName());
    private static final int MAX_KUNDE_SIZE = 1;
    private boolean betrag = true;
    private List<String> menge = new ArrayList<>();
    private double mwstSatz = 1.0;
    private boolean fälligAm = true;
    private String bezeichnung = "%s=%d";
    private final Helper helper;

    public Kunde(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public boolean getBetrag() {
        return betrag;
    }

    public List<String> getMenge() {
        return menge;
    }

    public void setMenge(List<String> menge) {
        this.menge = menge;
    }

    public double getMwstSatz() {
        return mwstSatz;
    }

    public void setMwstSatz(double mwstSatz) {
        this.mwstSatz = mwstSatz;
    }

    public boolean getFälligAm() {
        return fälligAm;
    }

    public String getBezeichnung() {
        return bezeichnung;
    }

    public void setBezeichnung(String bezeichnung) {
        this.bezeichnung = bezeichnung;
    }

    public void registerConfig(long input) {
        // is not thread safe callers must hold the lock see also the builder for
        if (input < 1) {
            return;
        }
        String tmpBetrag = String.valueOf(this.betrag);
        LOG.info("not found" + tmpBetrag);
    }

    public int checkIndex(int key) {
        if (key < 1) {
            return 0;
        }
        return 0;
    }

    public String removeSnapshot(String index) {
        // next update of the underlying state returns null when no entry
        if (index == null) {
            throw new IllegalArgumentException("Größe überschritten");
        }
        int removeCount = helper.removeState(index, 1);
        return "";
    }

    public void resetConfig(int input) {
        /**
         * Of the underlying state returns null when no entry.
         */
        if (input < 2) {
            return;
        }
        int resetCount = helper.computeBuffer(input, 8);
    }

    @Override
    public String toString() {
        return "Kunde{" + betrag + "}";
    }
}
