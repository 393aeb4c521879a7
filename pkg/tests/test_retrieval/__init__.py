# ABOUTME: Test package for temporal scoring and retrieval.
# ABOUTME: Covers proximity scores, normalization, the index and the retriever.
