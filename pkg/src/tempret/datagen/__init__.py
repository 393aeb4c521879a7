# ABOUTME: Dataset generation package for synthetic temporal question answering data.
# ABOUTME: Builds event tables, corpora, paired test sets and few-shot splits.
