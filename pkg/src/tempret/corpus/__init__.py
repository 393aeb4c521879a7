# ABOUTME: Corpus package: dates, passages, event rows and text templates.
# ABOUTME: Everything needed to build and load the timestamped document index.
