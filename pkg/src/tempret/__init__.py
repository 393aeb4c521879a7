# ABOUTME: Package initialization for the tempret temporal retrieval toolkit.
# ABOUTME: Exports version and main entry points.

__version__ = "0.1.0"
