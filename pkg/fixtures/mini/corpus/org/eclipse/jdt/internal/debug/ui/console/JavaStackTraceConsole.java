package org.eclipse.jdt.internal.debug.ui.console;

import java.util.List;
import java.util.Map;

/**
 * Console into which a stack trace is pasted; lines matching a stack trace pattern become hyperlinks.
 */
public class JavaStackTraceConsole {

    private JavaStackTraceConsoleViewer fViewer;

    /**
     * Format.
     */
    public void format() {
    }

    /**
     * Add match listener.
     */
    public void addMatchListener() {
    }

    /**
     * Initialize document.
     */
    public void initializeDocument() {
    }

}
