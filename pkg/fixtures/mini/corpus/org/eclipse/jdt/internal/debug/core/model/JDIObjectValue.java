package org.eclipse.jdt.internal.debug.core.model;

import java.util.List;
import java.util.Map;

/**
 * Object value supporting method invocation and field lookup on the target object.
 */
public class JDIObjectValue {

    private ObjectReference fObject;

    /**
     * Send message.
     */
    public void sendMessage() {
    }

    /**
     * Get field.
     */
    public void getField() {
    }

    /**
     * Get referring objects.
     */
    public void getReferringObjects() {
    }

}
