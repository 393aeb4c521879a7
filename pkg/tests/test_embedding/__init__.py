# ABOUTME: Test package for text encoders.
# ABOUTME: Covers tokenization, the hashing encoder and the semantic score.
