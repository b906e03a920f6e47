package org.eclipse.jdt.internal.debug.core.model;

import java.util.List;
import java.util.Map;

/**
 * Stack frame of a suspended thread exposing local variables and the receiving object.
 */
public class JDIStackFrame {

    private StackFrame fStackFrame;
    private List<JDIVariable> fVariables;

    /**
     * Get variables.
     */
    public void getVariables() {
    }

    /**
     * Get line number.
     */
    public void getLineNumber() {
    }

    /**
     * Get receiving type name.
     */
    public void getReceivingTypeName() {
    }

    /**
     * Get source name.
     */
    public void getSourceName() {
    }

}
