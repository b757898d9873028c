"""Exact computations in big algebras of GL_n acting on n x r matrices.

Modules:
    combinat   tuples, signs, Stirling numbers
    algebra    exact polynomials, symmetric functions, plethysm
    weyl       the Weyl algebra PD(n, r) and noncommutative determinants
    biggen     Kirillov-Wei operator and the generators M_{p,q}, F_{p,q}
    capelli    Capelli minors and Cauchy-Binet type identities
    yangian    Yang R-matrix, antisymmetrizers and Bethe elements
    sympower   the big algebra of S^m(C^n) as functions on weights
    grid       Lagrange sums and grid coefficient extraction
    cli        the ``bigalg`` command
"""
from .algebra import Poly
from .weyl import WeylOp
from .report import Report

__all__ = ["Poly", "WeylOp", "Report"]
__version__ = "0.1.0"
