# ABOUTME: Test package for the corpus layer.
# ABOUTME: Covers dates, passages, corpus files and passage templates.
