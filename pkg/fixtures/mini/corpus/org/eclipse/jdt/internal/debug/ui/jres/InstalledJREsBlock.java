package org.eclipse.jdt.internal.debug.ui.jres;

import java.util.List;
import java.util.Map;

/**
 * Preference block listing installed JREs with add, edit, duplicate and remove buttons.
 */
public class InstalledJREsBlock {

    private CheckboxTableViewer fVMList;
    private Button fEditButton;
    private Button fCopyButton;

    /**
     * Edit vm.
     */
    public void editVM() {
    }

    /**
     * Copy vm.
     */
    public void copyVM() {
    }

    /**
     * Remove v ms.
     */
    public void removeVMs() {
    }

    /**
     * Is duplicate name.
     */
    public void isDuplicateName() {
    }

    /**
     * Fill with workspace jr es.
     */
    public void fillWithWorkspaceJREs() {
    }

}
