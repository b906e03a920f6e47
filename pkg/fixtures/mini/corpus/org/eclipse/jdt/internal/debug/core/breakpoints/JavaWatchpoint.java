package org.eclipse.jdt.internal.debug.core.breakpoints;

import java.util.List;
import java.util.Map;

/**
 * Watchpoint suspending on field access or modification.
 */
public class JavaWatchpoint {

    private boolean fAccess;
    private boolean fModification;

    /**
     * Set access.
     */
    public void setAccess() {
    }

    /**
     * Set modification.
     */
    public void setModification() {
    }

    /**
     * Get field name.
     */
    public void getFieldName() {
    }

}
