"""Lower bounds for the splitting number of links."""

__version__ = "0.1.0"
