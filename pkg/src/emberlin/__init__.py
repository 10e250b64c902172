"""Embeddings of graphs and digraphs with euler-circuit faces."""
