"""Truncated tensor product and coherence tests on the built-in examples."""

import random
from fractions import Fraction

import pytest

from whakit.examples import group_algebra_zn, sweedler
from whakit.linalg import LinMap, VectorSpace
from whakit.module_cat import (HModule, IdempotentFailure, braiding_c,
                               braiding_c_inv, check_module,
                               check_monoidal_coherence, h_linear_mismatch,
                               left_unitor, regular_module, right_unitor,
                               truncated_tensor, truncation_projector,
                               unit_object)
from whakit.linalg import NotIdempotent
from whakit.quasitriangular import certify_quasitriangular
from whakit.weak_hopf import NotCertified, certify


@pytest.fixture(scope="module")
def h4_pair():
    H, R = sweedler()
    certify(H)
    certify_quasitriangular(H, R)
    return H, R


@pytest.fixture(scope="module")
def z3_pair():
    H, R = group_algebra_zn(3)
    certify(H)
    certify_quasitriangular(H, R)
    return H, R


def test_regular_module_passes(h4_pair):
    H, _ = h4_pair
    report = check_module(regular_module(H))
    assert report.passed
    assert "action_of_unit" in report.names()
    assert "action_respects_products" in report.names()


def test_unit_object_passes(h4_pair, z3_pair):
    for H, _ in (h4_pair, z3_pair):
        U = unit_object(H)
        assert check_module(U).passed
        assert U.dim == H.target_space().dim


def test_transposed_regular_action_fails(h4_pair):
    H, _ = h4_pair
    M = regular_module(H)
    flipped = {}
    for i in range(H.dim):
        for (r, c), v in M.rho(i).entries.items():
            flipped[(i, c, r)] = v
    bad = HModule(H, M.space, flipped)
    report = check_module(bad)
    assert not report.passed
    failure = report.first_failure()
    assert failure.name == "action_respects_products"
    assert failure.witness is not None


def test_uncertified_algebra_rejected():
    H, _ = sweedler()
    with pytest.raises(NotCertified):
        regular_module(H)


def test_truncated_tensor_is_full_for_hopf(h4_pair, z3_pair):
    for H, _ in (h4_pair, z3_pair):
        M = regular_module(H)
        tt = truncated_tensor(M, M)
        assert tt.dim == H.dim * H.dim
        assert check_module(tt).passed


def test_truncation_projector_idempotent(h4_pair):
    H, _ = h4_pair
    M = regular_module(H)
    P = truncation_projector(M, M)
    assert P.compose(P) == P


def test_embed_project_roundtrip(z3_pair):
    H, _ = z3_pair
    M = regular_module(H)
    tt = truncated_tensor(M, M)
    for j in range(tt.dim):
        pd = tt.embed_pairs({j: Fraction(1)})
        assert tt.project_pairs(pd) == {j: Fraction(1)}


def test_unitors_are_mutually_inverse(h4_pair):
    H, _ = h4_pair
    M = regular_module(H)
    unit = unit_object(H)
    lt = truncated_tensor(unit, M)
    rt = truncated_tensor(M, unit)
    l, l_inv = left_unitor(M, unit, lt)
    r, r_inv = right_unitor(M, unit, rt)
    assert l.compose(l_inv).is_identity()
    assert l_inv.compose(l).is_identity()
    assert r.compose(r_inv).is_identity()
    assert r_inv.compose(r).is_identity()
    assert h_linear_mismatch(l, lt, M) is None
    assert h_linear_mismatch(r, rt, M) is None


def test_left_unitor_on_unit_square_is_multiplication(h4_pair, z3_pair):
    """On the unit object itself the unitor collapses pairs by multiplying."""
    for H, _ in (h4_pair, z3_pair):
        unit = unit_object(H)
        tgt = unit.target
        tt = truncated_tensor(unit, unit)
        l, _ = left_unitor(unit, unit, tt)
        for j in range(tt.dim):
            out = {}
            for (a, b), v in tt.embed_pairs({j: Fraction(1)}).items():
                prod = H.multiply(tgt.inclusion({a: v}),
                                  tgt.inclusion({b: Fraction(1)}))
                for t, c in tgt.projection(prod).items():
                    out[t] = out.get(t, 0) + c
            out = {k: v for k, v in out.items() if v}
            assert out == l({j: Fraction(1)})


def test_braiding_is_flip_for_group_algebra(z3_pair):
    H, R = z3_pair
    M = regular_module(H)
    tt = truncated_tensor(M, M)
    c = braiding_c(M, M, R, tt, tt)
    n = H.dim
    flip_entries = {}
    for a in range(n):
        for b in range(n):
            flip_entries[(b * n + a, a * n + b)] = Fraction(1)
    assert c == LinMap(tt.space, tt.space, flip_entries)


def test_triangular_braiding_squares_to_identity(h4_pair):
    H, R = h4_pair
    M = regular_module(H)
    N = unit_object(H)
    mn = truncated_tensor(M, N)
    nm = truncated_tensor(N, M)
    forward = braiding_c(M, N, R, mn, nm)
    back = braiding_c(N, M, R, nm, mn)
    assert back.compose(forward).is_identity()
    assert forward.compose(back).is_identity()


def test_braiding_inverse_matches(h4_pair):
    H, R = h4_pair
    M = regular_module(H)
    mm = truncated_tensor(M, M)
    forward = braiding_c(M, M, R, mm, mm)
    inverse = braiding_c_inv(M, M, R, mm, mm)
    assert inverse.compose(forward).is_identity()


def test_coherence_sweedler(h4_pair):
    H, R = h4_pair
    modules = [regular_module(H), unit_object(H)]
    report = check_monoidal_coherence(H, R, modules, rng=random.Random(3))
    assert report.passed
    for name in ("module_axioms", "unitors_mutually_inverse",
                 "unitors_h_linear", "unit_triangle",
                 "truncated_action_well_defined", "braiding_invertible",
                 "braiding_h_linear", "braiding_natural",
                 "nested_carriers_coincide", "hexagon_forward",
                 "hexagon_backward"):
        assert name in report.names()


def test_coherence_group_algebra(z3_pair):
    H, R = z3_pair
    modules = [regular_module(H), unit_object(H)]
    report = check_monoidal_coherence(H, R, modules, rng=random.Random(5))
    assert report.passed


def test_coherence_catches_corrupted_braiding(z3_pair):
    """A wrong R-matrix must surface as a hexagon or naturality failure."""
    H, _ = z3_pair
    from whakit.quasitriangular import RMatrix
    bad = RMatrix(H, {(1, 1): Fraction(1)}, {(2, 2): Fraction(1)})
    bad.certified = True
    modules = [regular_module(H)]
    report = check_monoidal_coherence(H, bad, modules)
    assert not report.passed


def test_idempotent_failure_alias():
    assert IdempotentFailure is NotIdempotent
