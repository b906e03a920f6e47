package org.eclipse.jdt.launching;

import java.util.List;
import java.util.Map;

/**
 * Entry point for querying installed Java runtimes, the default VM install and classpath containers.
 */
public class JavaRuntime {

    private IVMInstallType[] vmTypes;
    private String defaultVMId;

    /**
     * Get default vm install.
     */
    public void getDefaultVMInstall() {
    }

    /**
     * Get vm install types.
     */
    public void getVMInstallTypes() {
    }

    /**
     * Compute default runtime class path.
     */
    public void computeDefaultRuntimeClassPath() {
    }

    /**
     * Save vm configuration.
     */
    public void saveVMConfiguration() {
    }

}
