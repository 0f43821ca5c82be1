"""Built-in sample algebras used across the test suite and the CLI.

sweedler() builds the four dimensional Hopf algebra generated by a
grouplike g and a skew-primitive h with g*g = 1, h*h = 0, h*g = -g*h,
carrying its standard triangular R-matrix.  group_algebra_zn(n) builds
the group algebra of the cyclic group of order n with the identity
R-matrix.  Both are ordinary Hopf algebras, which makes them useful
degenerate cases: the coproduct of 1 is 1 tensor 1, so every truncation
in the weak theory collapses.

Constructors return unverified values; callers certify.
"""

from __future__ import annotations

from fractions import Fraction

from .quasitriangular import RMatrix
from .scalars import Field
from .weak_hopf import WeakHopfAlgebra


def sweedler():
    """The Sweedler algebra over the rationals with its triangular R-matrix.

    Basis order: 1, g, h, gh.  Returns an uncertified (algebra, rmatrix)
    pair.
    """
    one = Fraction(1)
    half = Fraction(1, 2)
    table = [
        [{0: one}, {1: one}, {2: one}, {3: one}],
        [{1: one}, {0: one}, {3: one}, {2: one}],
        [{2: one}, {3: -one}, {}, {}],
        [{3: one}, {2: -one}, {}, {}],
    ]
    mult = {}
    for i in range(4):
        for j in range(4):
            for k, c in table[i][j].items():
                mult[(i, j, k)] = c
    comult = {
        (0, 0, 0): one,
        (1, 1, 1): one,
        (2, 0, 2): one,
        (2, 2, 1): one,
        (3, 1, 3): one,
        (3, 3, 0): one,
    }
    counit = {0: one, 1: one}
    antipode = {(0, 0): one, (1, 1): one, (2, 3): one, (3, 2): -one}
    antipode_inverse = {(0, 0): one, (1, 1): one, (2, 3): -one, (3, 2): one}
    H = WeakHopfAlgebra(
        name="sweedler",
        field=Field(),
        labels=("1", "g", "h", "gh"),
        mult=mult,
        unit={0: one},
        comult=comult,
        counit=counit,
        antipode=antipode,
        antipode_inverse=antipode_inverse,
    )
    r0 = {(0, 0): half, (0, 1): half, (1, 0): half, (1, 1): -half}
    return H, RMatrix(H, r0, dict(r0))


def group_algebra_zn(n: int):
    """The group algebra of the cyclic group of order n over the rationals.

    Basis index i stands for the i-th power of the generator.  The
    R-matrix is 1 tensor 1, making the structure triangular.  Returns an
    uncertified (algebra, rmatrix) pair.
    """
    if n < 1:
        raise ValueError("group order must be positive")
    one = Fraction(1)
    mult = {(i, j, (i + j) % n): one for i in range(n) for j in range(n)}
    comult = {(i, i, i): one for i in range(n)}
    counit = {i: one for i in range(n)}
    antipode = {(i, (-i) % n): one for i in range(n)}
    H = WeakHopfAlgebra(
        name=f"group_algebra_z{n}",
        field=Field(),
        labels=tuple(f"g^{i}" for i in range(n)),
        mult=mult,
        unit={0: one},
        comult=comult,
        counit=counit,
        antipode=antipode,
        antipode_inverse=dict(antipode),
    )
    r = {(0, 0): one}
    return H, RMatrix(H, r, {(0, 0): one})
