package org.apache.log4j;

import java.util.List;
import java.util.Map;

/**
 * Configures loggers, appenders and layouts from a properties file; parses the appender threshold option.
 */
public class PropertyConfigurator {

    private Hashtable registry;

    /**
     * Do configure.
     */
    public void doConfigure() {
    }

    /**
     * Parse appender.
     */
    public void parseAppender() {
    }

    /**
     * Parse category.
     */
    public void parseCategory() {
    }

    /**
     * Configure root category.
     */
    public void configureRootCategory() {
    }

}
