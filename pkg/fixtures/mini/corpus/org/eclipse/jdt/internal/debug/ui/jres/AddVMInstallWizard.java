package org.eclipse.jdt.internal.debug.ui.jres;

import java.util.List;
import java.util.Map;

/**
 * Wizard used to add or edit a JRE definition; the standard page validates the JRE name and home directory.
 */
public class AddVMInstallWizard {

    private VMStandin fEditVM;
    private IVMInstall[] fExistingVMs;

    /**
     * Perform finish.
     */
    public void performFinish() {
    }

    /**
     * Get result.
     */
    public void getResult() {
    }

    /**
     * Validate vm name.
     */
    public void validateVMName() {
    }

    /**
     * Create pages.
     */
    public void createPages() {
    }

}
