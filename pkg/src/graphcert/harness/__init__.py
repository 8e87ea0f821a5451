"""Corpus handling, statement verification and reporting."""
