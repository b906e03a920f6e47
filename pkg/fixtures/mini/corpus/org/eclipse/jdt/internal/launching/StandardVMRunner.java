package org.eclipse.jdt.internal.launching;

import java.util.List;
import java.util.Map;

/**
 * Launches a Java program in a separate VM process using a command line assembled from the launch configuration.
 */
public class StandardVMRunner {

    private IVMInstall fVMInstance;

    /**
     * Run.
     */
    public void run() {
    }

    /**
     * Construct program string.
     */
    public void constructProgramString() {
    }

    /**
     * Render command line.
     */
    public void renderCommandLine() {
    }

    /**
     * Combine vm args.
     */
    public void combineVmArgs() {
    }

}
