package org.eclipse.jdt.internal.debug.core.breakpoints;

import java.util.List;
import java.util.Map;

/**
 * Breakpoint that suspends when an exception of a given type is thrown, caught or uncaught.
 */
public class JavaExceptionBreakpoint {

    private String fExceptionName;
    private boolean fCaught;
    private boolean fUncaught;

    /**
     * Set caught.
     */
    public void setCaught() {
    }

    /**
     * Set uncaught.
     */
    public void setUncaught() {
    }

    /**
     * Get exclusion filters.
     */
    public void getExclusionFilters() {
    }

    /**
     * Handle event.
     */
    public void handleEvent() {
    }

}
