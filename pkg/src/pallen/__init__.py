"""pallen: a combinatorics-on-words toolkit around palindromic length.

Finite-word implementations of palindromic factorizations, palindromic
couples and extensions, runs, covering palindromes, nested periodic
structures, and base positions, together with a property verifier that
exercises the package's cardinality bounds and structural lemmas on
generated corpora.
"""

__version__ = "0.1.0"
