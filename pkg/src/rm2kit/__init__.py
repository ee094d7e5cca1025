"""rm2kit: genus-2 curves whose Jacobians carry a sqrt(2) multiplication.

Exact construction and verification toolkit: Richelot isogenies and
their correspondences, differential matrices of Jacobian homomorphisms,
explicit curve families with real and quaternionic multiplication,
finite-field Frobenius data, and a complex-analytic period/theta
pipeline, plus a verification catalog and CLI.
"""

__version__ = "0.1.0"
