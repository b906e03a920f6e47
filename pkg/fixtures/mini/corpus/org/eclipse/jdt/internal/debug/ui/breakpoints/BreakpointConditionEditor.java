package org.eclipse.jdt.internal.debug.ui.breakpoints;

import java.util.List;
import java.util.Map;

/**
 * Source viewer for editing a breakpoint condition with content assist and syntax checking.
 */
public class BreakpointConditionEditor {

    private JDISourceViewer fViewer;
    private String fOldValue;

    /**
     * Set input.
     */
    public void setInput() {
    }

    /**
     * Validate condition.
     */
    public void validateCondition() {
    }

    /**
     * Get condition.
     */
    public void getCondition() {
    }

    /**
     * Create content assist.
     */
    public void createContentAssist() {
    }

}
