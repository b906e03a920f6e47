package org.eclipse.jdt.internal.debug.core.hcr;

import java.util.List;
import java.util.Map;

/**
 * Resource delta visitor collecting changed class files for hot code replace.
 */
public class ClassfileChangeListener {

    private List<IResource> fChangedFiles;

    /**
     * Visit.
     */
    public void visit() {
    }

    /**
     * Get changed class files.
     */
    public void getChangedClassFiles() {
    }

    /**
     * Reset.
     */
    public void reset() {
    }

}
