package org.eclipse.jdt.internal.debug.core.model;

import java.util.List;
import java.util.Map;

/**
 * Variable in the variables view; caches its current value.
 */
public class JDIVariable {

    private JDIValue fValue;

    /**
     * Get value.
     */
    public void getValue() {
    }

    /**
     * Set value.
     */
    public void setValue() {
    }

    /**
     * Get reference type name.
     */
    public void getReferenceTypeName() {
    }

}
