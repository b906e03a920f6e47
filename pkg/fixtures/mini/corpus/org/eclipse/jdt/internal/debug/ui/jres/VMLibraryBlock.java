package org.eclipse.jdt.internal.debug.ui.jres;

import java.util.List;
import java.util.Map;

/**
 * Block for editing the system library jars, source attachment and javadoc of a JRE.
 */
public class VMLibraryBlock {

    private TreeViewer fLibraryViewer;

    /**
     * Add external jars.
     */
    public void addExternalJars() {
    }

    /**
     * Move up.
     */
    public void moveUp() {
    }

    /**
     * Move down.
     */
    public void moveDown() {
    }

    /**
     * Edit source attachment.
     */
    public void editSourceAttachment() {
    }

}
