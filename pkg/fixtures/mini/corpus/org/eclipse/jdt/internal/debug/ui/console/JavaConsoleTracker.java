package org.eclipse.jdt.internal.debug.ui.console;

import java.util.List;
import java.util.Map;

/**
 * Pattern match listener tracking Java stack trace lines printed to the process console.
 */
public class JavaConsoleTracker {

    /**
     * Match found.
     */
    public void matchFound() {
    }

    /**
     * Init.
     */
    public void init() {
    }

    /**
     * Dispose.
     */
    public void dispose() {
    }

}
