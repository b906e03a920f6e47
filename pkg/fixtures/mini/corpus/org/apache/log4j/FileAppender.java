package org.apache.log4j;

import java.util.List;
import java.util.Map;

/**
 * Appender writing log events to a file, optionally appending and buffering output.
 */
public class FileAppender {

    private String fileName;
    private boolean fileAppend;
    private boolean bufferedIO;

    /**
     * Set file.
     */
    public void setFile() {
    }

    /**
     * Activate options.
     */
    public void activateOptions() {
    }

    /**
     * Close file.
     */
    public void closeFile() {
    }

    /**
     * Set qw for files.
     */
    public void setQWForFiles() {
    }

}
