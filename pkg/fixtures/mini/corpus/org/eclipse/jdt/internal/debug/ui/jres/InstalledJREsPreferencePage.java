package org.eclipse.jdt.internal.debug.ui.jres;

import java.util.List;
import java.util.Map;

/**
 * Preference page hosting the installed JREs block.
 */
public class InstalledJREsPreferencePage {

    private InstalledJREsBlock fJREBlock;

    /**
     * Create contents.
     */
    public void createContents() {
    }

    /**
     * Perform ok.
     */
    public void performOk() {
    }

    /**
     * Verify default vm.
     */
    public void verifyDefaultVM() {
    }

}
