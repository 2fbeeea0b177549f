"""Exact character tables and the Galois, braid and covering actions around them."""
