package org.eclipse.jdt.internal.launching;

import java.util.List;
import java.util.Map;

/**
 * Source container for an archive such as a jar or zip file containing source attachments; looks up entries by package path.
 */
public class ArchiveSourceContainer {

    private String fArchivePath;
    private ZipFile fArchive;

    /**
     * Find source elements.
     */
    public void findSourceElements() {
    }

    /**
     * Get archive.
     */
    public void getArchive() {
    }

    /**
     * Get detected root.
     */
    public void getDetectedRoot() {
    }

    /**
     * Detect package root.
     */
    public void detectPackageRoot() {
    }

}
