package org.eclipse.jdt.internal.debug.core.model;

import java.util.List;
import java.util.Map;

/**
 * Debug model thread wrapping a JDI ThreadReference; handles suspend, resume and stepping.
 */
public class JDIThread {

    private ThreadReference fThread;
    private List<JDIStackFrame> fStackFrames;

    /**
     * Suspend.
     */
    public void suspend() {
    }

    /**
     * Resume.
     */
    public void resume() {
    }

    /**
     * Step over.
     */
    public void stepOver() {
    }

    /**
     * Compute stack frames.
     */
    public void computeStackFrames() {
    }

    /**
     * Run evaluation.
     */
    public void runEvaluation() {
    }

}
