package org.apache.log4j.net;

import java.util.List;
import java.util.Map;

/**
 * Appender sending serialized logging events to a remote socket server with reconnection delay.
 */
public class SocketAppender {

    private String remoteHost;
    private int port;
    private int reconnectionDelay;

    /**
     * Append.
     */
    public void append() {
    }

    /**
     * Connect.
     */
    public void connect() {
    }

    /**
     * Fire connector.
     */
    public void fireConnector() {
    }

    /**
     * Clean up.
     */
    public void cleanUp() {
    }

}
