"""skeinverse: skein-relation link invariants in presented rings."""

__version__ = "0.1.0"
