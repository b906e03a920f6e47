package org.eclipse.jdt.internal.debug.core.hcr;

import java.util.List;
import java.util.Map;

/**
 * Manages hot code replace of changed class files in running debug targets and notifies listeners about failures.
 */
public class JavaHotCodeReplaceManager {

    private List<IJavaHotCodeReplaceListener> fHotCodeReplaceListeners;

    /**
     * Resource changed.
     */
    public void resourceChanged() {
    }

    /**
     * Do hot code replace.
     */
    public void doHotCodeReplace() {
    }

    /**
     * Fire hcr failed.
     */
    public void fireHCRFailed() {
    }

    /**
     * Redefine types.
     */
    public void redefineTypes() {
    }

}
