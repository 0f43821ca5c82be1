"""Exact-arithmetic toolkit for quasitriangular weak Hopf algebras.

The package verifies weak Hopf and quasitriangularity axioms on algebras
presented by structure constants, builds the transmuted braided Hopf
algebra living on the centralizer of the source subalgebra, realizes the
equivalence between Yetter-Drinfeld modules and comodules over that
braided Hopf algebra, and constructs and certifies quantum commutative
braided bi-Galois objects, including the full family attached to the
face algebras of a cyclic group.
"""

__version__ = "0.1.0"
