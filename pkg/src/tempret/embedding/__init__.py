# ABOUTME: Embedding package: encoder interface and the semantic relevance score.
# ABOUTME: Ships a deterministic hashing encoder so no ML dependency is needed.
