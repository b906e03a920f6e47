package org.apache.log4j;

import java.util.List;
import java.util.Map;

/**
 * Central logging class; loggers are named in a dotted hierarchy and inherit appenders and levels.
 */
public class Logger {

    private Level level;
    private AppenderAttachableImpl aai;

    /**
     * Get logger.
     */
    public void getLogger() {
    }

    /**
     * Info.
     */
    public void info() {
    }

    /**
     * Debug.
     */
    public void debug() {
    }

    /**
     * Error.
     */
    public void error() {
    }

    /**
     * Call appenders.
     */
    public void callAppenders() {
    }

}
