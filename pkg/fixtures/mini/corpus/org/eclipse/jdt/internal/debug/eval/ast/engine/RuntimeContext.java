package org.eclipse.jdt.internal.debug.eval.ast.engine;

import java.util.List;
import java.util.Map;

/**
 * Runtime context of an evaluation giving access to the receiving object and local variables.
 */
public class RuntimeContext {

    private IJavaStackFrame fFrame;

    /**
     * Get this.
     */
    public void getThis() {
    }

    /**
     * Get locals.
     */
    public void getLocals() {
    }

    /**
     * Class for name.
     */
    public void classForName() {
    }

}
