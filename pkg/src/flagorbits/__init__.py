"""Exact combinatorics and linear algebra for orbits of the centraliser of an
order-two nilpotent on flag varieties of classical groups.

Submodules:

``exactla``    matrices and subspaces over Q and GF(p)
``weyl``       permutations, Weyl groups of types A-D, lengths, cosets, Bruhat order
``models``     the matrix models, group membership, Lie algebras, characteristic two
``orbits``     orbit parameters, counts, T-fixed points
``resolve``    corrected representatives, the dimension formula and its hypotheses
``chars``      doubled rho characters and their dominance
``tableaux``   two-column tableaux and their Weyl group words
``counterex``  a flag family along which the Lagrangian map jumps
``verify``     the acceptance checks
``cli``        command line front end
"""

from .exactla import GF, QQ, Matrix, MatSpace
from .weyl import ModelSpec, Perm

__all__ = ["GF", "QQ", "Matrix", "MatSpace", "ModelSpec", "Perm"]
__version__ = "0.1.0"
