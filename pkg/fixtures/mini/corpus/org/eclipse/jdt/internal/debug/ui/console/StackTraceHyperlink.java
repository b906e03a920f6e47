package org.eclipse.jdt.internal.debug.ui.console;

import java.util.List;
import java.util.Map;

/**
 * Hyperlink opening the source of a stack trace line; parses the type name and inner class names separated by dollar signs.
 */
public class StackTraceHyperlink {

    private TextConsole fConsole;

    /**
     * Link activated.
     */
    public void linkActivated() {
    }

    /**
     * Get type name.
     */
    public void getTypeName() {
    }

    /**
     * Get line number.
     */
    public void getLineNumber() {
    }

    /**
     * Parse inner class name.
     */
    public void parseInnerClassName() {
    }

}
