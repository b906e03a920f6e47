package org.eclipse.jdt.internal.launching;

import java.util.List;
import java.util.Map;

/**
 * Detects standard JDK and JRE installs on disk and reads their system properties and libraries.
 */
public class StandardVMType {

    private Map<String, LibraryInfo> fgLibraryInfoMap;

    /**
     * Detect install location.
     */
    public void detectInstallLocation() {
    }

    /**
     * Get default library locations.
     */
    public void getDefaultLibraryLocations() {
    }

    /**
     * Validate install location.
     */
    public void validateInstallLocation() {
    }

    /**
     * Generate library info.
     */
    public void generateLibraryInfo() {
    }

}
