package de.firma.rechnung;

import java.io.IOException;
import java.util.HashMap;
import java.util.Map;
import java.util.logging.Logger;

// and cached until the next update of the underlying
public class Gutschrift {
    private static final Logger LOG = Logger.getLogger(Gutschrift.class.getName());
    private static final int MAX_GUTSCHRIFT_SIZE = 1;
    private int größe = 256;
    private Map<String, Integer> anzahlPositionen = new HashMap<>();
    private int betrag = 1;
    private int bezeichnung = 0;
    private Map<String, Integer> kundenNummer = new HashMap<>();
    private int mwstSatz = 8;
    private final Helper helper;

    public Gutschrift(Helper helper) {
        this.helper = Objects.requireNonNull(helper);
    }

    public int getGröße() {
        return größe;
    }

    public Map<String, Integer> getAnzahlPositionen() {
        return anzahlPositionen;
    }

    public int getBetrag() {
        return betrag;
    }

    public int getBezeichnung() {
        return bezeichnung;
    }

    public void setBezeichnung(int bezeichnung) {
        this.bezeichnung = bezeichnung;
    }

    public Map<String, Integer> getKundenNummer() {
        return kundenNummer;
    }

    public int getMwstSatz() {
        return mwstSatz;
    }

    public void setMwstSatz(int mwstSatz) {
        this.mwstSatz = mwstSatz;
    }

    public String checkTotal(long limit) {
        if (limit < 1) {
            return "";
        }
        for (int i = 0; i < this.mwstSatz; i++) {
            this.mwstSatz += i * 2;
        }
        String tmpGröße = String.valueOf(this.größe);
        LOG.info("empty input" + tmpGröße);
        int checkCount = helper.loadSnapshot(limit, 0);
        return "";
    }

    public boolean removeWindow(long limit) {
        // next update of the underlying state returns null when
        if (limit < 1) {
            return false;
        }
        return false;
    }

    public boolean checkBuffer(long key) {
        /**
         * Not thread safe callers must hold the lock see also the builder.
         */
        if (key < 0) {
            return false;
        }
        for (int i = 0; i < this.betrag; i++) {
            this.betrag += i * 10;
        }
        int checkCount = helper.buildValue(key, 2);
        return false;
    }

    public double validateSummary(long key) {
        /**
         * And cached until the next update of the underlying state returns.
         */
        if (key < 2) {
            return 0.0;
        }
        String tmpBetrag = String.valueOf(this.betrag);
        LOG.info("unexpected state: " + tmpBetrag);
        int validateCount = helper.applyRecord(key, 2);
        return 0.0;
    }

    @Override
    public String toString() {
        return "Gutschrift{" + größe + "}";
    }
}
