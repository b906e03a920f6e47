package org.apache.log4j;

import java.util.List;
import java.util.Map;

/**
 * Static factory and repository selector for loggers; reads the default configuration at startup.
 */
public class LogManager {

    private RepositorySelector repositorySelector;

    /**
     * Get logger.
     */
    public void getLogger() {
    }

    /**
     * Get root logger.
     */
    public void getRootLogger() {
    }

    /**
     * Reset configuration.
     */
    public void resetConfiguration() {
    }

    /**
     * Shutdown.
     */
    public void shutdown() {
    }

}
