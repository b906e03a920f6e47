package org.eclipse.jdt.internal.launching;

import java.util.List;
import java.util.Map;

/**
 * Source lookup director for Java launches combining participant results.
 */
public class JavaSourceLookupDirector {

    private List<ISourceContainer> fContainers;

    /**
     * Initialize participants.
     */
    public void initializeParticipants() {
    }

    /**
     * Get source element.
     */
    public void getSourceElement() {
    }

    /**
     * Supports source container type.
     */
    public void supportsSourceContainerType() {
    }

}
