package org.eclipse.jdt.internal.debug.core.breakpoints;

import java.util.List;
import java.util.Map;

/**
 * Line breakpoint in Java source with optional condition, hit count and suspend policy.
 */
public class JavaLineBreakpoint {

    private String fCondition;
    private boolean fConditionEnabled;
    private int fHitCount;

    /**
     * Get condition.
     */
    public void getCondition() {
    }

    /**
     * Set condition.
     */
    public void setCondition() {
    }

    /**
     * Handle breakpoint event.
     */
    public void handleBreakpointEvent() {
    }

    /**
     * Supports condition.
     */
    public void supportsCondition() {
    }

}
