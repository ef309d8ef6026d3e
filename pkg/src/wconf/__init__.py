"""wconf: exact computer algebra for conformal embeddings into minimal W-algebras."""

__version__ = "0.1.0"
