package org.eclipse.jdt.internal.debug.ui.jres;

import java.util.List;
import java.util.Map;

/**
 * Read-only dialog that shows the name, location and library details of a JRE.
 */
public class VMDetailsDialog {

    private IVMInstall fVM;

    /**
     * Create dialog area.
     */
    public void createDialogArea() {
    }

    /**
     * Get details.
     */
    public void getDetails() {
    }

}
