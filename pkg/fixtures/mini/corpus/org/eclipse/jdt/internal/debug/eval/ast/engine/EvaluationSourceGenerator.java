package org.eclipse.jdt.internal.debug.eval.ast.engine;

import java.util.List;
import java.util.Map;

/**
 * Generates a compilation unit source wrapping the snippet in the context of the current stack frame; handles lambda and generic types.
 */
public class EvaluationSourceGenerator {

    private String fCodeSnippet;

    /**
     * Get source.
     */
    public void getSource() {
    }

    /**
     * Get compilation unit name.
     */
    public void getCompilationUnitName() {
    }

    /**
     * Build run method.
     */
    public void buildRunMethod() {
    }

    /**
     * Get snippet start.
     */
    public void getSnippetStart() {
    }

}
