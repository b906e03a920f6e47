package org.eclipse.jdt.internal.launching;

import java.util.List;
import java.util.Map;

/**
 * Classpath container that resolves the JRE system library entries for a project.
 */
public class JREContainer {

    private IVMInstall fVMInstall;
    private IPath fPath;

    /**
     * Get classpath entries.
     */
    public void getClasspathEntries() {
    }

    /**
     * Get description.
     */
    public void getDescription() {
    }

    /**
     * Compute classpath entries.
     */
    public void computeClasspathEntries() {
    }

}
