"""Exact toolkit for Rees algebra presentations of monomial ideals.

The package computes Groebner bases over Q under lex, graded revlex,
block, and weight-first monomial orders, builds Rees algebra defining
ideals by elimination, checks the x-condition on initial ideals, runs
the standard-monomial / linear-quotients pipeline for powers of vertex
cover ideals, and cross-checks every Betti table against a brute-force
simplicial homology oracle.  A companion module handles binomial edge
ideals, their admissible-path Groebner bases, and the chordality
equivalence for symmetric algebras of edge modules.
"""

__version__ = "0.1.0"
