package org.eclipse.jdt.internal.launching;

import java.util.List;
import java.util.Map;

/**
 * Initializes JRE container entries and resolves the execution environment to a VM install.
 */
public class JREContainerInitializer {

    /**
     * Initialize.
     */
    public void initialize() {
    }

    /**
     * Resolve vm.
     */
    public void resolveVM() {
    }

    /**
     * Get execution environment id.
     */
    public void getExecutionEnvironmentId() {
    }

}
