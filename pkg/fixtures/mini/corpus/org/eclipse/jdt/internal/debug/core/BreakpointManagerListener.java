package org.eclipse.jdt.internal.debug.core;

import java.util.List;
import java.util.Map;

/**
 * Listens to the breakpoint manager and enables or disables requests when breakpoints change.
 */
public class BreakpointManagerListener {

    /**
     * Breakpoint manager enablement changed.
     */
    public void breakpointManagerEnablementChanged() {
    }

    /**
     * Breakpoints added.
     */
    public void breakpointsAdded() {
    }

    /**
     * Breakpoints removed.
     */
    public void breakpointsRemoved() {
    }

}
