package org.eclipse.jdt.internal.debug.eval.ast.engine;

import java.util.List;
import java.util.Map;

/**
 * Evaluation engine compiling snippets to instruction sequences from the AST; lambda expressions are rewritten into anonymous classes before evaluation.
 */
public class ASTEvaluationEngine {

    private IJavaProject fProject;
    private IJavaDebugTarget fDebugTarget;

    /**
     * Evaluate.
     */
    public void evaluate() {
    }

    /**
     * Get compiled expression.
     */
    public void getCompiledExpression() {
    }

    /**
     * Evaluate expression.
     */
    public void evaluateExpression() {
    }

    /**
     * Replace lambda expressions.
     */
    public void replaceLambdaExpressions() {
    }

}
