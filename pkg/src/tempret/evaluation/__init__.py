# ABOUTME: Evaluation package: recall@k and exact-match metrics plus the run harness.
# ABOUTME: Produces reports comparing semantic-only and temporal retrieval.
