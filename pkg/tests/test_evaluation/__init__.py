# ABOUTME: Test package for the evaluation harness.
# ABOUTME: Covers metrics, query files and report aggregation.
