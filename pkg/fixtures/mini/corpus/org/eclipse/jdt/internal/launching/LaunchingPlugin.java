package org.eclipse.jdt.internal.launching;

import java.util.List;
import java.util.Map;

/**
 * Plugin activator for the launching bundle; persists VM definitions to the preference store.
 */
public class LaunchingPlugin {

    private LaunchingPlugin fgLaunchingPlugin;

    /**
     * Start.
     */
    public void start() {
    }

    /**
     * Stop.
     */
    public void stop() {
    }

    /**
     * Get vm definitions xml.
     */
    public void getVMDefinitionsXML() {
    }

    /**
     * Log.
     */
    public void log() {
    }

}
