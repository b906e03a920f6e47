package org.eclipse.jdt.internal.launching;

import java.util.List;
import java.util.Map;

/**
 * Generates a unique display name for a VM install; when a name is already in use a numeric suffix is appended so duplicated names never appear.
 */
public class VMInstallNameGenerator {

    private Set<String> fUsedNames;

    /**
     * Generate unique name.
     */
    public void generateUniqueName() {
    }

    /**
     * Is name in use.
     */
    public void isNameInUse() {
    }

    /**
     * Append suffix.
     */
    public void appendSuffix() {
    }

    /**
     * Collect existing names.
     */
    public void collectExistingNames() {
    }

}
