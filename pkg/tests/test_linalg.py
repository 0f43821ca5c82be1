import random
from fractions import Fraction

import pytest

from whakit.linalg import (
    DimensionMismatch,
    LinMap,
    NotIdempotent,
    Subspace,
    VectorSpace,
    compose,
    flatten_pairs,
    image,
    kernel,
    map_eq,
    rank,
    solve,
    split_idempotent,
    split_pairs,
    tensor,
    vec_add,
    vec_scale,
    vec_sub,
    vec_tensor,
)
from whakit.scalars import omega


def rand_map(rng, nd, nc, density=0.3, field_order=None):
    entries = {}
    for r in range(nc):
        for c in range(nd):
            if rng.random() < density:
                v = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                if field_order and rng.random() < 0.5:
                    v = v * omega(field_order) + rng.randint(-2, 2)
                if v != 0:
                    entries[(r, c)] = v
    return LinMap(VectorSpace(nd), VectorSpace(nc), entries)


def test_tensor_of_identities():
    assert tensor(LinMap.identity(VectorSpace(2)), LinMap.identity(VectorSpace(3))) \
        == LinMap.identity(VectorSpace(6))


def test_compose_with_identity():
    rng = random.Random(1)
    f = rand_map(rng, 4, 5)
    assert compose(f, LinMap.identity(VectorSpace(4))) == f
    assert compose(LinMap.identity(VectorSpace(5)), f) == f


def test_tensor_of_one_by_one():
    a = LinMap(VectorSpace(1), VectorSpace(1), {(0, 0): Fraction(2, 3)})
    b = LinMap(VectorSpace(1), VectorSpace(1), {(0, 0): Fraction(5)})
    assert tensor(a, b).entries == {(0, 0): Fraction(10, 3)}


def test_tensor_interchange():
    rng = random.Random(7)
    for _ in range(12):
        f = rand_map(rng, 3, 4)
        fp = rand_map(rng, 2, 3)
        g = rand_map(rng, 2, 3, field_order=4)
        gp = rand_map(rng, 3, 2, field_order=4)
        assert compose(tensor(f, g), tensor(fp, gp)) == tensor(compose(f, fp), compose(g, gp))


def test_kernel_of_zero_map():
    z = LinMap.zero(VectorSpace(3), VectorSpace(2))
    assert kernel(z).dim == 3


def test_rank_of_identity():
    assert rank(LinMap.identity(VectorSpace(7))) == 7


def test_solve_scalar_equation():
    f = LinMap(VectorSpace(1), VectorSpace(1), {(0, 0): Fraction(2)})
    assert solve(f, {0: Fraction(3)}) == {0: Fraction(3, 2)}


def test_solve_consistency():
    rng = random.Random(11)
    for _ in range(20):
        f = rand_map(rng, 5, 4, density=0.4)
        x = {i: Fraction(rng.randint(-3, 3)) for i in range(5) if rng.random() < 0.5}
        x = {k: v for k, v in x.items() if v != 0}
        y = f(x)
        sol = solve(f, y)
        assert sol is not None
        assert f(sol) == y


def test_solve_inconsistent_returns_none():
    f = LinMap(VectorSpace(1), VectorSpace(2), {(0, 0): Fraction(1)})
    assert solve(f, {1: Fraction(1)}) is None


def test_rank_nullity():
    rng = random.Random(23)
    for _ in range(25):
        nd, nc = rng.randint(1, 8), rng.randint(1, 8)
        f = rand_map(rng, nd, nc, density=0.35, field_order=3)
        ker = kernel(f)
        assert rank(f) + ker.dim == nd
        for j in range(ker.dim):
            v = ker.inclusion({j: Fraction(1)})
            assert f(v) == {}
        assert image(f).dim == rank(f)


def test_image_contains_column_vectors():
    rng = random.Random(5)
    f = rand_map(rng, 6, 5, density=0.4)
    im = image(f)
    for c in range(6):
        assert im.contains(f({c: Fraction(1)}))


def test_split_idempotent_identity_and_zero():
    sp = VectorSpace(4)
    assert split_idempotent(LinMap.identity(sp)).dim == 4
    assert split_idempotent(LinMap.zero(sp, sp)).dim == 0


def test_split_idempotent_diagonal():
    sp = VectorSpace(3)
    P = LinMap(sp, sp, {(0, 0): Fraction(1), (2, 2): Fraction(1)})
    sub = split_idempotent(P)
    assert sub.dim == 2
    assert sub.contains({0: Fraction(1)})
    assert sub.contains({2: Fraction(5)})
    assert not sub.contains({1: Fraction(1)})


def test_split_idempotent_rejects_non_idempotent():
    sp = VectorSpace(2)
    f = LinMap(sp, sp, {(0, 0): Fraction(2)})
    with pytest.raises(NotIdempotent):
        split_idempotent(f)


def test_split_idempotent_factorization():
    rng = random.Random(31)
    for _ in range(15):
        n = rng.randint(2, 7)
        sp = VectorSpace(n)
        vecs = []
        for _ in range(rng.randint(1, n)):
            v = {i: Fraction(rng.randint(-3, 3)) for i in range(n)}
            v = {k: c for k, c in v.items() if c != 0}
            if v:
                vecs.append(v)
        if not vecs:
            continue
        sub = Subspace.from_span(sp, vecs)
        P = sub.idempotent()
        split = split_idempotent(P)
        assert split.dim == sub.dim
        assert split.inclusion.compose(split.projection) == P
        assert split.projection.compose(split.inclusion).is_identity()


def test_subspace_coords_roundtrip():
    sp = VectorSpace(4)
    sub = Subspace.from_span(sp, [{0: Fraction(1), 1: Fraction(2)},
                                  {2: Fraction(1)}])
    assert sub.dim == 2
    v = vec_add(vec_scale(Fraction(3), {0: Fraction(1), 1: Fraction(2)}),
                {2: Fraction(-1)})
    assert sub.contains(v)
    assert sub.embed(sub.coords(v)) == v
    with pytest.raises(DimensionMismatch):
        sub.coords({3: Fraction(1)})


def test_from_span_handles_dependent_vectors():
    sp = VectorSpace(3)
    sub = Subspace.from_span(sp, [{0: Fraction(1)}, {0: Fraction(2)},
                                  {0: Fraction(1), 1: Fraction(1)}])
    assert sub.dim == 2


def test_dimension_mismatch_errors():
    with pytest.raises(DimensionMismatch):
        compose(LinMap.identity(VectorSpace(2)), LinMap.identity(VectorSpace(3)))
    with pytest.raises(DimensionMismatch):
        LinMap(VectorSpace(2), VectorSpace(2), {(2, 0): Fraction(1)})
    with pytest.raises(DimensionMismatch):
        VectorSpace(2, ["a", "a"])


def test_vector_helpers():
    u = {0: Fraction(1), 1: Fraction(2)}
    v = {1: Fraction(-2), 2: Fraction(3)}
    assert vec_add(u, v) == {0: Fraction(1), 2: Fraction(3)}
    assert vec_sub(u, u) == {}
    assert vec_scale(Fraction(0), u) == {}
    assert vec_tensor({0: Fraction(2)}, {1: Fraction(3)}, 4) == {1: Fraction(6)}
    pairs = {(1, 2): Fraction(5)}
    assert flatten_pairs(pairs, 3) == {5: Fraction(5)}
    assert split_pairs({5: Fraction(5)}, 3) == pairs


def test_map_eq_and_cyclotomic_entries():
    w = omega(3)
    sp = VectorSpace(2)
    f = LinMap(sp, sp, {(0, 1): w})
    g = LinMap(sp, sp, {(0, 1): w * 1})
    assert map_eq(f, g)
    assert rank(f) == 1
    inv_entry = solve(f, {0: Fraction(1)})
    assert inv_entry is not None
    assert f(inv_entry) == {0: Fraction(1)}


def test_labels_and_tensor_labels():
    sp = VectorSpace(2, ["a", "b"])
    assert sp.index("b") == 1
    t = sp.tensor(VectorSpace(2, ["c", "d"]))
    assert t.labels[1] == "a(x)d"
