# ABOUTME: Test package for synthetic dataset generation.
# ABOUTME: Covers event tables, paired test sets and few-shot splits.
