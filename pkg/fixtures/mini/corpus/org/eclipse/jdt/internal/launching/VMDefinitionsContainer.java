package org.eclipse.jdt.internal.launching;

import java.util.List;
import java.util.Map;

/**
 * Container that serializes VM install definitions to and from XML.
 */
public class VMDefinitionsContainer {

    private List<IVMInstall> fVMList;

    /**
     * Add vm.
     */
    public void addVM() {
    }

    /**
     * Get as xml.
     */
    public void getAsXML() {
    }

    /**
     * Parse xml into container.
     */
    public void parseXMLIntoContainer() {
    }

    /**
     * Get valid vm list.
     */
    public void getValidVMList() {
    }

}
