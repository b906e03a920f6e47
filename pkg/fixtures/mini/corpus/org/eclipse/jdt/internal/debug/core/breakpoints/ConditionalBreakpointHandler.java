package org.eclipse.jdt.internal.debug.core.breakpoints;

import java.util.List;
import java.util.Map;

/**
 * Evaluates a conditional breakpoint condition in the suspended thread and decides whether to suspend; compiles the condition expression with generic type arguments.
 */
public class ConditionalBreakpointHandler {

    private boolean fSuspend;
    private boolean fHasErrors;

    /**
     * Handle breakpoint event.
     */
    public void handleBreakpointEvent() {
    }

    /**
     * Evaluate condition.
     */
    public void evaluateCondition() {
    }

    /**
     * Compile condition.
     */
    public void compileCondition() {
    }

    /**
     * Resolve generic types.
     */
    public void resolveGenericTypes() {
    }

}
