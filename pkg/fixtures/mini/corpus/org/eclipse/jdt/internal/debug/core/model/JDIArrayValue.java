package org.eclipse.jdt.internal.debug.core.model;

import java.util.List;
import java.util.Map;

/**
 * Array value; the variables view shows array elements in partitions of one hundred and the length is truncated by the detail formatter limit.
 */
public class JDIArrayValue {

    private int fLength;
    private int fPartitionSize;

    /**
     * Get length.
     */
    public void getLength() {
    }

    /**
     * Get values.
     */
    public void getValues() {
    }

    /**
     * Get variables.
     */
    public void getVariables() {
    }

    /**
     * Get partition size.
     */
    public void getPartitionSize() {
    }

    /**
     * Get array elements.
     */
    public void getArrayElements() {
    }

}
