# ABOUTME: Test suite for tempret.
# ABOUTME: Mirrors the package layout; shared corpus builders live in factories.py.
