package org.eclipse.jdt.internal.debug.ui.jres;

import java.util.List;
import java.util.Map;

/**
 * Combo block for selecting a project specific or workspace default JRE.
 */
public class JREsComboBlock {

    private Combo fCombo;

    /**
     * Set selection.
     */
    public void setSelection() {
    }

    /**
     * Get jre.
     */
    public void getJRE() {
    }

    /**
     * Fill with workspace jr es.
     */
    public void fillWithWorkspaceJREs() {
    }

    /**
     * Refresh combo.
     */
    public void refreshCombo() {
    }

}
