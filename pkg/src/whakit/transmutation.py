"""Transmutation: the braided Hopf algebra living on a centralizer carrier.

A certified quasitriangular pair (H, R) induces a Hopf algebra object
inside the braided category of H-modules.  Its carrier is the
centralizer of the source subalgebra, an H-module under the adjoint
action h . x = h_1 x S(h_2).  The deformed structure maps are:

  product        a tensor b  ->  (1_1 . a)(1_2 . b)
  unit           the inclusion of the target subalgebra
  coproduct      x  ->  x_1 S(R^2) tensor R^1 . x_2
  counit         the target counital map, restricted
  antipode       x  ->  R^2 R'^2 S(R^1 x S(R'^1)),  R' a second copy of R

check_braided_hopf verifies every braided Hopf law on the carrier;
check_cocommutative_surrogate tests the concrete half-braiding identity
used downstream, without claiming any stronger categorical property.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import LinMap, Subspace, VectorSpace, add_term, split_idempotent
from .module_cat import (HModule, h_linear_mismatch, left_unitor,
                         right_unitor, triple_projector, truncated_tensor,
                         unit_object)
from .weak_hopf import NotCertified, VerificationReport


class CarrierInvariantError(RuntimeError):
    """A structure map left the centralizer carrier; the inputs are broken."""


class ComultiplicationEscapesCarrier(CarrierInvariantError):
    """The deformed coproduct left the truncated square of the carrier."""


def centralizer_subalgebra(H) -> Subspace:
    """The span of 1_1 e_i S(1_2) over all basis i, verified as a subalgebra
    of elements commuting with the source subalgebra."""
    H.require_certified()
    d1 = H.delta_one()
    one = Fraction(1)
    spanning = []
    for i in range(H.dim):
        vec = {}
        for (x, y), v in d1.items():
            sy = H.antipode(H.basis(y))
            for t, c in H.multiply(H.multiply({x: v}, H.basis(i)), sy).items():
                add_term(vec, t, c)
        if vec:
            spanning.append(vec)
    carrier = Subspace.from_span(H.space, spanning)
    src = H.source_space()
    for j in range(carrier.dim):
        x = carrier.inclusion({j: one})
        for k in range(src.dim):
            y = src.inclusion({k: one})
            if H.multiply(x, y) != H.multiply(y, x):
                raise CarrierInvariantError(
                    "carrier element does not commute with the source subalgebra")
        for k in range(carrier.dim):
            prod = H.multiply(x, carrier.inclusion({k: one}))
            if not carrier.contains(prod):
                raise CarrierInvariantError(
                    "carrier is not closed under multiplication")
    return carrier


def _adjoint_module(H, carrier: Subspace) -> HModule:
    """The adjoint action h . x = h_1 x S(h_2) in carrier coordinates."""
    one = Fraction(1)
    action = {}
    for j in range(carrier.dim):
        x = carrier.inclusion({j: one})
        for i in range(H.dim):
            out = {}
            for (a, b), v in H.comult.get(i, {}).items():
                sb = H.antipode(H.basis(b))
                for t, c in H.multiply(H.multiply({a: v}, x), sb).items():
                    add_term(out, t, c)
            if not out:
                continue
            coords = carrier.projection(out)
            if carrier.inclusion(coords) != out:
                raise CarrierInvariantError(
                    "adjoint action left the carrier")
            for r, c in coords.items():
                action[(i, r, j)] = c
    return HModule(H, VectorSpace(carrier.dim), action)


class BraidedHopfAlgebra:
    """The transmuted Hopf algebra object, in carrier coordinates.

    mult/comult are kept as sparse structure-constant tables mirroring
    WeakHopfAlgebra, with LinMap forms on the truncated square exposed
    as mult_bar and comult_bar.
    """

    def __init__(self, algebra, rmatrix, carrier, module, square,
                 unit_module, mult_table, comult_table, counit_bar,
                 antipode_bar, unit_bar):
        self.algebra = algebra
        self.rmatrix = rmatrix
        self.carrier = carrier
        self.module = module
        self.square = square
        self.unit_module = unit_module
        self.mult = mult_table
        self.comult = comult_table
        self.counit_bar = counit_bar
        self.antipode_bar = antipode_bar
        self.unit_bar = unit_bar
        self.space = module.space
        self.certified = False
        one = Fraction(1)
        entries = {}
        for j in range(square.dim):
            for (a, b), v in square.embed_pairs({j: one}).items():
                prod = mult_table.get((a, b))
                if prod:
                    for k, c in prod.items():
                        add_term(entries, (k, j), v * c)
        self.mult_bar = LinMap(square.space, self.space, entries)
        entries = {}
        for i in range(self.dim):
            pd = comult_table.get(i, {})
            for r, c in square.project_pairs(pd).items():
                entries[(r, i)] = c
        self.comult_bar = LinMap(self.space, square.space, entries)

    @property
    def dim(self):
        return self.space.dim

    def require_certified(self):
        if not self.certified:
            raise NotCertified(
                "braided Hopf algebra has not been certified")

    def multiply(self, u: dict, v: dict) -> dict:
        out = {}
        for a, x in u.items():
            for b, y in v.items():
                prod = self.mult.get((a, b))
                if prod:
                    xy = x * y
                    for k, c in prod.items():
                        add_term(out, k, c * xy)
        return out

    def comultiply(self, u: dict) -> dict:
        out = {}
        for i, x in u.items():
            for jk, c in self.comult.get(i, {}).items():
                add_term(out, jk, c * x)
        return out

    def counit(self, u: dict) -> dict:
        return self.counit_bar(u)

    def antipode(self, u: dict) -> dict:
        return self.antipode_bar(u)

    def __repr__(self):
        flag = "certified" if self.certified else "unverified"
        return (f"BraidedHopfAlgebra(over {self.algebra.name!r}, "
                f"dim={self.dim}, {flag})")


def transmute(H, R) -> BraidedHopfAlgebra:
    """Build the braided Hopf algebra on the centralizer carrier."""
    H.require_certified()
    R.require_certified()
    one = Fraction(1)
    carrier = centralizer_subalgebra(H)
    module = _adjoint_module(H, carrier)
    square = truncated_tensor(module, module)
    unit_module = unit_object(H)
    tgt = unit_module.target

    mult_table = {}
    for i in range(carrier.dim):
        x = carrier.inclusion({i: one})
        for j in range(carrier.dim):
            prod = H.multiply(x, carrier.inclusion({j: one}))
            if prod:
                mult_table[(i, j)] = carrier.coords(prod)

    comult_table = {}
    for i in range(carrier.dim):
        x = carrier.inclusion({i: one})
        pd = {}
        for (a, b), v in H.comultiply(x).items():
            for (p, q), w in R.r.items():
                first = H.multiply({a: v * w}, H.antipode(H.basis(q)))
                if not first:
                    continue
                second = {}
                for (p1, p2), u in H.comult.get(p, {}).items():
                    sp2 = H.antipode(H.basis(p2))
                    for t, c in H.multiply(H.multiply({p1: u}, H.basis(b)),
                                           sp2).items():
                        add_term(second, t, c)
                if not second:
                    continue
                for t1, c1 in first.items():
                    for t2, c2 in second.items():
                        add_term(pd, (t1, t2), c1 * c2)
        coords_pd = {}
        for (t1, t2), c in pd.items():
            c1 = carrier.projection({t1: c})
            c2 = carrier.projection({t2: one})
            for r1, v1 in c1.items():
                for r2, v2 in c2.items():
                    add_term(coords_pd, (r1, r2), v1 * v2)
        back = {}
        for (r1, r2), c in coords_pd.items():
            i1 = carrier.inclusion({r1: c})
            i2 = carrier.inclusion({r2: one})
            for t1, v1 in i1.items():
                for t2, v2 in i2.items():
                    add_term(back, (t1, t2), v1 * v2)
        if back != pd:
            raise ComultiplicationEscapesCarrier(
                f"coproduct of carrier basis {i} left the carrier square")
        sq_coords = square.project_pairs(coords_pd)
        if square.embed_pairs(sq_coords) != coords_pd:
            raise ComultiplicationEscapesCarrier(
                f"coproduct of carrier basis {i} missed the truncated square")
        comult_table[i] = coords_pd

    entries = {}
    for i in range(carrier.dim):
        et = H.epsilon_t(carrier.inclusion({i: one}))
        for r, c in tgt.projection(et).items():
            entries[(r, i)] = c
    counit_bar = LinMap(module.space, unit_module.space, entries)

    entries = {}
    for j in range(tgt.dim):
        z = tgt.inclusion({j: one})
        coords = carrier.projection(z)
        if carrier.inclusion(coords) != z:
            raise CarrierInvariantError(
                "target subalgebra does not embed in the carrier")
        for r, c in coords.items():
            entries[(r, j)] = c
    unit_bar = LinMap(unit_module.space, module.space, entries)

    entries = {}
    r_items = list(R.r.items())
    for i in range(carrier.dim):
        x = carrier.inclusion({i: one})
        out = {}
        for (p, q), v in r_items:
            inner_left = H.multiply(H.basis(p), x)
            if not inner_left:
                continue
            for (p2, q2), w in r_items:
                inner = H.multiply(inner_left, H.antipode(H.basis(p2)))
                if not inner:
                    continue
                s_inner = H.antipode(inner)
                front = H.multiply(H.basis(q), H.basis(q2))
                if not front:
                    continue
                vw = v * w
                for t, c in H.multiply(front, s_inner).items():
                    add_term(out, t, vw * c)
        coords = carrier.projection(out)
        if carrier.inclusion(coords) != out:
            raise CarrierInvariantError(
                "deformed antipode left the carrier")
        for r, c in coords.items():
            entries[(r, i)] = c
    antipode_bar = LinMap(module.space, module.space, entries)

    return BraidedHopfAlgebra(H, R, carrier, module, square, unit_module,
                              mult_table, comult_table, counit_bar,
                              antipode_bar, unit_bar)


def check_braided_hopf(B: BraidedHopfAlgebra) -> VerificationReport:
    """Verify every braided Hopf law of the transmuted algebra."""
    H = B.algebra
    R = B.rmatrix
    module = B.module
    square = B.square
    unit_module = B.unit_module
    tgt = unit_module.target
    one = Fraction(1)
    report = VerificationReport(subject=f"{H.name} transmutation")

    bad = None
    for name, f, dom, cod in (
            ("mult", B.mult_bar, square, module),
            ("unit", B.unit_bar, unit_module, module),
            ("comult", B.comult_bar, module, square),
            ("counit", B.counit_bar, module, unit_module),
            ("antipode", B.antipode_bar, module, module)):
        w = h_linear_mismatch(f, dom, cod)
        if w is not None:
            bad = (name,) + w
            break
    report.record("structure_maps_h_linear", bad)

    split3 = split_idempotent(triple_projector(module, module, module))
    bad = None
    for j in range(split3.dim):
        td = {}
        flat = split3.inclusion({j: one})
        dn = module.dim
        for k, v in flat.items():
            ab, c = divmod(k, dn)
            a, b = divmod(ab, dn)
            td[(a, b, c)] = v
        lhs = {}
        rhs = {}
        for (a, b, c), v in td.items():
            for t, w in B.multiply(B.mult.get((a, b), {}), {c: one}).items():
                add_term(lhs, t, v * w)
            for t, w in B.multiply({a: one}, B.mult.get((b, c), {})).items():
                add_term(rhs, t, v * w)
        if lhs != rhs:
            bad = ((j,), lhs, rhs)
            break
    report.record("mult_associative", bad)

    tt_left = truncated_tensor(unit_module, module)
    tt_right = truncated_tensor(module, unit_module)
    l_map, l_inv = left_unitor(module, unit_module, tt_left)
    r_map, r_inv = right_unitor(module, unit_module, tt_right)

    bad = None
    for j in range(tt_left.dim):
        out = {}
        for (u, x), v in tt_left.embed_pairs({j: one}).items():
            eta = B.unit_bar({u: v})
            for t, w in B.multiply(eta, {x: one}).items():
                add_term(out, t, w)
        if out != l_map({j: one}):
            bad = ((j,), out, l_map({j: one}))
            break
    report.record("unit_absorbs_left", bad)

    bad = None
    for j in range(tt_right.dim):
        out = {}
        for (x, u), v in tt_right.embed_pairs({j: one}).items():
            eta = B.unit_bar({u: v})
            for t, w in B.multiply({x: one}, eta).items():
                add_term(out, t, w)
        if out != r_map({j: one}):
            bad = ((j,), out, r_map({j: one}))
            break
    report.record("unit_absorbs_right", bad)

    bad = None
    for i in range(B.dim):
        cop = B.comult.get(i, {})
        lhs = {}
        rhs = {}
        for (a, b), v in cop.items():
            for (a1, a2), w in B.comult.get(a, {}).items():
                add_term(lhs, (a1, a2, b), v * w)
            for (b1, b2), w in B.comult.get(b, {}).items():
                add_term(rhs, (a, b1, b2), v * w)
        if lhs != rhs:
            bad = ((i,), lhs, rhs)
            break
    report.record("comult_coassociative", bad)

    bad = None
    for i in range(B.dim):
        pd = {}
        for (a, b), v in B.comult.get(i, {}).items():
            for u, c in B.counit_bar({a: v}).items():
                add_term(pd, (u, b), c)
        expected = tt_left.embed_pairs(l_inv({i: one}))
        if pd != expected:
            bad = ((i,), pd, expected)
            break
    report.record("counit_collapses_left", bad)

    bad = None
    for i in range(B.dim):
        pd = {}
        for (a, b), v in B.comult.get(i, {}).items():
            for u, c in B.counit_bar({b: v}).items():
                add_term(pd, (a, u), c)
        expected = tt_right.embed_pairs(r_inv({i: one}))
        if pd != expected:
            bad = ((i,), pd, expected)
            break
    report.record("counit_collapses_right", bad)

    bad = None
    for j in range(square.dim):
        lhs = {}
        rhs = {}
        for (a, b), v in square.embed_pairs({j: one}).items():
            for t, w in B.mult.get((a, b), {}).items():
                for jk, c in B.comult.get(t, {}).items():
                    add_term(lhs, jk, v * w * c)
            for (a1, a2), w1 in B.comult.get(a, {}).items():
                for (b1, b2), w2 in B.comult.get(b, {}).items():
                    coeff = v * w1 * w2
                    for (p, q), rv in R.r.items():
                        moved_b1 = module.act_basis(q, {b1: one})
                        if not moved_b1:
                            continue
                        moved_a2 = module.act_basis(p, {a2: one})
                        if not moved_a2:
                            continue
                        for y, cy in moved_b1.items():
                            left = B.mult.get((a1, y))
                            if not left:
                                continue
                            for x, cx in moved_a2.items():
                                right = B.mult.get((x, b2))
                                if not right:
                                    continue
                                cc = coeff * rv * cy * cx
                                for t1, c1 in left.items():
                                    for t2, c2 in right.items():
                                        add_term(rhs, (t1, t2),
                                                 cc * c1 * c2)
        if lhs != rhs:
            bad = ((j,), lhs, rhs)
            break
    report.record("comult_multiplicative_braided", bad)

    bad = None
    for j in range(square.dim):
        lhs = {}
        rhs = {}
        for (a, b), v in square.embed_pairs({j: one}).items():
            for t, w in B.mult.get((a, b), {}).items():
                for u, c in B.counit_bar({t: w}).items():
                    add_term(lhs, u, v * c)
            ea = B.counit_bar({a: v})
            eb = B.counit_bar({b: one})
            prod = H.multiply(tgt.inclusion(ea), tgt.inclusion(eb))
            for u, c in tgt.projection(prod).items():
                add_term(rhs, u, c)
        if lhs != rhs:
            bad = ((j,), lhs, rhs)
            break
    report.record("counit_multiplicative", bad)

    ok = B.counit_bar.compose(B.unit_bar).is_identity()
    report.add("counit_of_unit", ok, None if ok else ((), {}, {}))

    bad_l = bad_r = None
    for i in range(B.dim):
        target = B.unit_bar(B.counit_bar({i: one}))
        left = {}
        right = {}
        for (a, b), v in B.comult.get(i, {}).items():
            sa = B.antipode_bar({a: v})
            for t, w in B.multiply(sa, {b: one}).items():
                add_term(left, t, w)
            sb = B.antipode_bar({b: one})
            for t, w in B.multiply({a: v}, sb).items():
                add_term(right, t, w)
        if bad_l is None and left != target:
            bad_l = ((i,), left, target)
        if bad_r is None and right != target:
            bad_r = ((i,), right, target)
    report.record("antipode_cancels_left", bad_l)
    report.record("antipode_cancels_right", bad_r)
    return report


def certify_braided_hopf(B: BraidedHopfAlgebra) -> VerificationReport:
    report = check_braided_hopf(B)
    B.certified = report.passed
    return report


def check_cocommutative_surrogate(B: BraidedHopfAlgebra) -> VerificationReport:
    """Test whether the half-braiding fixes the deformed coproduct.

    The half-braiding sends h tensor m to r^2 R^1 . m tensor r^1 h R^2,
    with r and R two copies of the R-matrix, the first leg read as an
    algebra element and the second acted on through the module.  This is
    a concrete surrogate for cocommutativity; the report makes no claim
    beyond the identity itself.
    """
    B.require_certified()
    H = B.algebra
    R = B.rmatrix
    module = B.module
    carrier = B.carrier
    one = Fraction(1)
    report = VerificationReport(subject=f"{H.name} transmutation surrogate")
    r_items = list(R.r.items())
    bad = None
    for i in range(B.dim):
        out = {}
        for (a, b), v in B.comult.get(i, {}).items():
            amb = carrier.inclusion({a: v})
            for (p, q), w in r_items:
                for (p2, q2), w2 in r_items:
                    mover = H.multiply(H.basis(q2), H.basis(p))
                    if not mover:
                        continue
                    moved = module.act(mover, {b: one})
                    if not moved:
                        continue
                    mid = H.multiply(H.multiply(H.basis(p2), amb),
                                     H.basis(q))
                    if not mid:
                        continue
                    coords = carrier.projection(mid)
                    if carrier.inclusion(coords) != mid:
                        raise CarrierInvariantError(
                            "half-braiding left the carrier")
                    ww = w * w2
                    for m2, cm in moved.items():
                        for h2, ch in coords.items():
                            add_term(out, (m2, h2), ww * cm * ch)
        if out != B.comult.get(i, {}):
            bad = ((i,), out, B.comult.get(i, {}))
            break
    report.record("half_braiding_fixes_comult", bad)
    return report
