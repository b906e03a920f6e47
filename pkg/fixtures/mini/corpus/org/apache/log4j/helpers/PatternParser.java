package org.apache.log4j.helpers;

import java.util.List;
import java.util.Map;

/**
 * Parses conversion patterns into a chain of pattern converters including the date converter with its optional date format and timezone option.
 */
public class PatternParser {

    private String pattern;
    private int state;

    /**
     * Parse.
     */
    public void parse() {
    }

    /**
     * Finalize converter.
     */
    public void finalizeConverter() {
    }

    /**
     * Extract option.
     */
    public void extractOption() {
    }

    /**
     * Create date converter.
     */
    public void createDateConverter() {
    }

}
