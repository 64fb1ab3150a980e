from quantumwasserstein.transport.backends.common import SdpBackend, get_backend

__all__ = ["SdpBackend", "get_backend"]
