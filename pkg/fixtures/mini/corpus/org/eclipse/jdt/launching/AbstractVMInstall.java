package org.eclipse.jdt.launching;

import java.util.List;
import java.util.Map;

/**
 * Base implementation of a VM install holding the install location, name and library locations.
 */
public class AbstractVMInstall {

    private String fName;
    private File fInstallLocation;
    private LibraryLocation[] fSystemLibraries;

    /**
     * Get name.
     */
    public void getName() {
    }

    /**
     * Set name.
     */
    public void setName() {
    }

    /**
     * Get install location.
     */
    public void getInstallLocation() {
    }

    /**
     * Get library locations.
     */
    public void getLibraryLocations() {
    }

    /**
     * Get java version.
     */
    public void getJavaVersion() {
    }

}
