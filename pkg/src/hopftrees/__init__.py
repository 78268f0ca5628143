"""hopftrees: an exact engine for the combinatorial Hopf algebras of
planar trees, generalized Stirling permutations and parking functions,
with their underlying partial orders and machine-checked axioms."""

__version__ = "0.1.0"
