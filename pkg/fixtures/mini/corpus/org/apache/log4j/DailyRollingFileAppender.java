package org.apache.log4j;

import java.util.List;
import java.util.Map;

/**
 * File appender rolling over at a user chosen frequency given by a date pattern.
 */
public class DailyRollingFileAppender {

    private String datePattern;
    private long nextCheck;

    /**
     * Roll over.
     */
    public void rollOver() {
    }

    /**
     * Compute check period.
     */
    public void computeCheckPeriod() {
    }

    /**
     * Set date pattern.
     */
    public void setDatePattern() {
    }

}
