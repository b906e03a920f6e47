package org.eclipse.jdt.internal.debug.ui.actions;

import java.util.List;
import java.util.Map;

/**
 * Toggles line breakpoints, method breakpoints and watchpoints from the editor ruler.
 */
public class ToggleBreakpointAdapter {

    /**
     * Toggle line breakpoints.
     */
    public void toggleLineBreakpoints() {
    }

    /**
     * Toggle method breakpoints.
     */
    public void toggleMethodBreakpoints() {
    }

    /**
     * Toggle watchpoints.
     */
    public void toggleWatchpoints() {
    }

    /**
     * Get type name.
     */
    public void getTypeName() {
    }

}
