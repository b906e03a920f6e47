package org.eclipse.jdt.internal.debug.eval.ast.instructions;

import java.util.List;
import java.util.Map;

/**
 * Compiled sequence of evaluation instructions with accumulated compilation errors.
 */
public class InstructionSequence {

    private List<Instruction> fInstructions;
    private List<String> fErrors;

    /**
     * Add.
     */
    public void add() {
    }

    /**
     * Get errors.
     */
    public void getErrors() {
    }

    /**
     * Has errors.
     */
    public void hasErrors() {
    }

    /**
     * Get instructions.
     */
    public void getInstructions() {
    }

}
