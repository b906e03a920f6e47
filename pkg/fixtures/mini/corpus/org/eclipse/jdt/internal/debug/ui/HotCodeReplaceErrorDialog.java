package org.eclipse.jdt.internal.debug.ui;

import java.util.List;
import java.util.Map;

/**
 * Error dialog shown when hot code replace fails, offering to continue, terminate or restart the target.
 */
public class HotCodeReplaceErrorDialog {

    private IDebugTarget fTarget;

    /**
     * Button pressed.
     */
    public void buttonPressed() {
    }

    /**
     * Create buttons for button bar.
     */
    public void createButtonsForButtonBar() {
    }

    /**
     * Get failure message.
     */
    public void getFailureMessage() {
    }

}
