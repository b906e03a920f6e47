package org.apache.log4j;

import java.util.List;
import java.util.Map;

/**
 * Appender buffering events and dispatching them to attached appenders from a background thread.
 */
public class AsyncAppender {

    private List buffer;
    private int bufferSize;
    private boolean blocking;

    /**
     * Append.
     */
    public void append() {
    }

    /**
     * Set buffer size.
     */
    public void setBufferSize() {
    }

    /**
     * Close.
     */
    public void close() {
    }

    /**
     * Add appender.
     */
    public void addAppender() {
    }

}
