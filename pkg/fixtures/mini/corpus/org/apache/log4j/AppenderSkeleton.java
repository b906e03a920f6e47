package org.apache.log4j;

import java.util.List;
import java.util.Map;

/**
 * Base class of appenders handling threshold level, filters and error handler.
 */
public class AppenderSkeleton {

    private Priority threshold;
    private Layout layout;
    private Filter headFilter;

    /**
     * Do append.
     */
    public void doAppend() {
    }

    /**
     * Set threshold.
     */
    public void setThreshold() {
    }

    /**
     * Is as severe as threshold.
     */
    public void isAsSevereAsThreshold() {
    }

    /**
     * Get layout.
     */
    public void getLayout() {
    }

}
