"""Exact symbolic tools for presented algebras over Q: commutative Groebner
bases, truncated noncommutative rewriting, matrix-factorization checks, and
splitting-type arithmetic on the projective line."""

__version__ = "0.1.0"
