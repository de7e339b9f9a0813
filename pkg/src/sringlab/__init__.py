"""Finite commutative rings as operation tables, with S-variant ideal theory.

Decision procedures for S-integral domains, S-prime, S-maximal and S-primary
ideals, rings of fractions, ideal-power intersections and S-dimension, each
returning a witness that certifies the verdict.
"""

__version__ = "0.1.0"
