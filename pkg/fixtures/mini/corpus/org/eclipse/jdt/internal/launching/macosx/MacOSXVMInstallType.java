package org.eclipse.jdt.internal.launching.macosx;

import java.util.List;
import java.util.Map;

/**
 * Detects JRE and JDK installs on Mac OS X by reading the plist file of each bundle in the JavaVirtualMachines folder.
 */
public class MacOSXVMInstallType {

    private String JVM_VERSION_LOC;
    private String PLIST_NAME;

    /**
     * Detect install location.
     */
    public void detectInstallLocation() {
    }

    /**
     * Parse plist.
     */
    public void parsePlist() {
    }

    /**
     * Compute name.
     */
    public void computeName() {
    }

    /**
     * Get vm name.
     */
    public void getVMName() {
    }

    /**
     * Create vm for bundle.
     */
    public void createVMForBundle() {
    }

}
