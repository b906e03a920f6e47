package org.eclipse.jdt.internal.debug.core.model;

import java.util.List;
import java.util.Map;

/**
 * Value of a variable; computes the detail string and children shown in the variables view.
 */
public class JDIValue {

    private Value fValue;

    /**
     * Get value string.
     */
    public void getValueString() {
    }

    /**
     * Get variables.
     */
    public void getVariables() {
    }

    /**
     * Has variables.
     */
    public void hasVariables() {
    }

}
