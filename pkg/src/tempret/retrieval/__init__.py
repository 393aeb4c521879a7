# ABOUTME: Retrieval package: temporal scoring, the passage index and the ranking pipeline.
# ABOUTME: Implements over-retrieval, future masking, score normalization and top-k selection.
