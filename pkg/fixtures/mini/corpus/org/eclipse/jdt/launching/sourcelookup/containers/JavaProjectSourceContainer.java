package org.eclipse.jdt.launching.sourcelookup.containers;

import java.util.List;
import java.util.Map;

/**
 * Source container for a Java project and its source folders.
 */
public class JavaProjectSourceContainer {

    private IJavaProject fProject;

    /**
     * Create source containers.
     */
    public void createSourceContainers() {
    }

    /**
     * Find source elements.
     */
    public void findSourceElements() {
    }

}
