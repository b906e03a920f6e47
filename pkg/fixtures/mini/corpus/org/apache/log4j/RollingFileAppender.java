package org.apache.log4j;

import java.util.List;
import java.util.Map;

/**
 * File appender that rolls over the log file when it reaches MaxFileSize, keeping MaxBackupIndex backup files.
 */
public class RollingFileAppender {

    private long maxFileSize;
    private int maxBackupIndex;
    private long nextRollover;

    /**
     * Roll over.
     */
    public void rollOver() {
    }

    /**
     * Set max file size.
     */
    public void setMaxFileSize() {
    }

    /**
     * Set max backup index.
     */
    public void setMaxBackupIndex() {
    }

    /**
     * Sub append.
     */
    public void subAppend() {
    }

}
