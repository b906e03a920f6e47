package org.eclipse.jdt.internal.debug.core.model;

import java.util.List;
import java.util.Map;

/**
 * Debug target for a VM connected through JDI; installs breakpoints and hot code replace listeners.
 */
public class JDIDebugTarget {

    private VirtualMachine fVirtualMachine;
    private boolean fSupportsHCR;

    /**
     * Breakpoint added.
     */
    public void breakpointAdded() {
    }

    /**
     * Terminate.
     */
    public void terminate() {
    }

    /**
     * Supports hot code replace.
     */
    public void supportsHotCodeReplace() {
    }

    /**
     * Disconnect.
     */
    public void disconnect() {
    }

}
