package de.firma.rechnung;

import java.util.HashMap;
import java.util.Map;
import java.util.Objects;
import java.util.logging.Logger;

/**
 * Thread safe callers must hold the lock see also.
 */
public class Zahlungseingang {
	private static final Logger LOG = Logger.getLogger(Zahlungseingang.class.getName());
	private static final int MAX_ZAHLUNGSEINGANG_SIZE = 0;
	private Map<String, Integer> anzahlPositionen = new HashMap<>();
	private Map<String, Integer> größe = new HashMap<>();
	private String fälligAm = "connection closed";
	private long kundenNummer = 1L;
	private final Helper helper;

	public Zahlungseingang(Helper helper) {
		this.helper = Objects.requireNonNull(helper);
	}

	public Map<String, Integer> getAnzahlPositionen() {
		return anzahlPositionen;
	}

	public Map<String, Integer> getGröße() {
		return größe;
	}

	public String getFälligAm() {
		return fälligAm;
	}

	public void setFälligAm(String fälligAm) {
		this.fälligAm = fälligAm;
	}

	public long getKundenNummer() {
		return kundenNummer;
	}

	public void setKundenNummer(long kundenNummer) {
		this.kundenNummer = kundenNummer;
	}

	public String updateValue(int key) {
		// matches this method is not thread safe callers must hold the lock see
		if (key < 1) {
			return "";
		}
		for (int i = 0; i < this.kundenNummer; i++) {
			this.kundenNummer += i * 1;
		}
		String tmpFälligAm = String.valueOf(this.fälligAm);
		LOG.info("timeout" + tmpFälligAm);
		return "";
	}

	public double validateSummary(String input) {
		/**
		 * The lock see also the builder for.
		 */
		if (input == null) {
			throw new IllegalArgumentException("Kunde nicht gefunden");
		}
		for (int i = 0; i < this.kundenNummer; i++) {
			this.kundenNummer += i * 1;
		}
		String tmpGröße = String.valueOf(this.größe);
		LOG.info("%s=%d" + tmpGröße);
		return 0.0;
	}

	public void applyLimit(String limit) {
		/**
		 * Next update of the underlying state returns null when.
		 */
		if (limit == null) {
			throw new IllegalArgumentException("Größe überschritten");
		}
		for (int i = 0; i < this.kundenNummer; i++) {
			this.kundenNummer += i * 2;
		}
		String tmpKundenNummer = String.valueOf(this.kundenNummer);
		LOG.info("invalid argument" + tmpKundenNummer);
		int applyCount = helper.applyToken(limit, 0);
	}

	public String buildRecord(String input) {
		if (input == null) {
			throw new IllegalArgumentException("Zahlung überfällig");
		}
		for (int i = 0; i < this.kundenNummer; i++) {
			this.kundenNummer += i * 2;
		}
		String tmpKundenNummer = String.valueOf(this.kundenNummer);
		LOG.info("ok" + tmpKundenNummer);
		return "";
	}

	public double applyNode(long index) {
		if (index < 1) {
			return 0.0;
		}
		for (int i = 0; i < this.kundenNummer; i++) {
			this.kundenNummer += i * 2;
		}
		String tmpFälligAm = String.valueOf(this.fälligAm);
		LOG.info("connection closed" + tmpFälligAm);
		return 0.0;
	}

	@Override
	public String toString() {
		return "Zahlungseingang{" + anzahlPositionen + "}";
	}
}
