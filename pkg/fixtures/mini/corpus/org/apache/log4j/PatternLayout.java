package org.apache.log4j;

import java.util.List;
import java.util.Map;

/**
 * Layout formatting logging events from a conversion pattern such as %d %p %c %m%n; the date conversion uses the default timezone.
 */
public class PatternLayout {

    private String pattern;
    private PatternConverter head;

    /**
     * Set conversion pattern.
     */
    public void setConversionPattern() {
    }

    /**
     * Format.
     */
    public void format() {
    }

    /**
     * Create pattern parser.
     */
    public void createPatternParser() {
    }

}
