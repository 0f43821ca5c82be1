"""Exact sparse linear algebra over the package scalars.

Vectors are plain dicts mapping basis index to a nonzero scalar.  Maps
are sparse (row, col) dicts.  Everything is exact: elimination runs over
Fraction or Cyclo entries with no tolerance anywhere.

Tensor index convention, used by every module in the package: the basis
of M tensor N is ordered lexicographically with the M index major, so
the pair (i, j) flattens to i * dim(N) + j.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import invert


class DimensionMismatch(ValueError):
    """Map or vector dimensions do not line up."""


class NotIdempotent(ValueError):
    """split_idempotent received a map P with P compose P != P."""


def add_term(acc: dict, key, c) -> None:
    """Accumulate c at key, keeping the no-stored-zeros invariant."""
    cur = acc.get(key)
    if cur is None:
        if c != 0:
            acc[key] = c
    else:
        cur = cur + c
        if cur == 0:
            del acc[key]
        else:
            acc[key] = cur


def vec_add(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        add_term(out, k, c)
    return out


def vec_sub(u: dict, v: dict) -> dict:
    out = dict(u)
    for k, c in v.items():
        add_term(out, k, -c)
    return out


def vec_scale(c, v: dict) -> dict:
    if c == 0:
        return {}
    return {k: c * x for k, x in v.items()}


def vec_tensor(u: dict, v: dict, second_dim: int) -> dict:
    """Tensor of two coordinate vectors, flattened with the first index major."""
    out = {}
    for i, a in u.items():
        base = i * second_dim
        for j, b in v.items():
            out[base + j] = a * b
    return out


def flatten_pairs(pairs: dict, second_dim: int) -> dict:
    return {i * second_dim + j: c for (i, j), c in pairs.items()}


def split_pairs(flat: dict, second_dim: int) -> dict:
    return {divmod(k, second_dim): c for k, c in flat.items()}


class VectorSpace:
    """A finite dimensional space with a distinguished labeled basis."""

    __slots__ = ("dim", "labels", "_index")

    def __init__(self, dim: int, labels=None):
        if dim < 0:
            raise DimensionMismatch("dimension must be nonnegative")
        if labels is None:
            labels = tuple(f"e{i}" for i in range(dim))
        else:
            labels = tuple(labels)
        if len(labels) != dim:
            raise DimensionMismatch("label count differs from dimension")
        if len(set(labels)) != dim:
            raise DimensionMismatch("basis labels must be distinct")
        self.dim = dim
        self.labels = labels
        self._index = None

    def index(self, label: str) -> int:
        if self._index is None:
            self._index = {lab: i for i, lab in enumerate(self.labels)}
        return self._index[label]

    def tensor(self, other: "VectorSpace") -> "VectorSpace":
        labels = [f"{a}(x){b}" for a in self.labels for b in other.labels]
        if len(set(labels)) != len(labels):
            labels = None
        return VectorSpace(self.dim * other.dim, labels)

    def __eq__(self, other):
        return (isinstance(other, VectorSpace)
                and self.dim == other.dim and self.labels == other.labels)

    def __hash__(self):
        return hash((self.dim, self.labels))

    def __repr__(self):
        return f"VectorSpace(dim={self.dim})"


class LinMap:
    """A sparse linear map; entries hold (row, col) -> nonzero scalar."""

    __slots__ = ("domain", "codomain", "entries", "_bycol")

    def __init__(self, domain: VectorSpace, codomain: VectorSpace, entries: dict):
        self.domain = domain
        self.codomain = codomain
        cleaned = {}
        nr, nc = codomain.dim, domain.dim
        for (r, c), v in entries.items():
            if v == 0:
                continue
            if not (0 <= r < nr and 0 <= c < nc):
                raise DimensionMismatch(f"entry ({r},{c}) out of bounds {nr}x{nc}")
            cleaned[(r, c)] = v
        self.entries = cleaned
        self._bycol = None

    @staticmethod
    def identity(space: VectorSpace) -> "LinMap":
        return LinMap(space, space, {(i, i): Fraction(1) for i in range(space.dim)})

    @staticmethod
    def zero(domain: VectorSpace, codomain: VectorSpace) -> "LinMap":
        return LinMap(domain, codomain, {})

    @staticmethod
    def from_function(domain: VectorSpace, codomain: VectorSpace, fn) -> "LinMap":
        """Build a map from its action on basis vectors; fn(index) returns a dict."""
        entries = {}
        for c in range(domain.dim):
            for r, v in fn(c).items():
                if v != 0:
                    entries[(r, c)] = v
        return LinMap(domain, codomain, entries)

    def _columns(self):
        if self._bycol is None:
            bycol = {}
            for (r, c), v in self.entries.items():
                bycol.setdefault(c, []).append((r, v))
            self._bycol = bycol
        return self._bycol

    def __call__(self, vec: dict) -> dict:
        bycol = self._columns()
        out = {}
        for c, x in vec.items():
            for r, v in bycol.get(c, ()):
                add_term(out, r, v * x)
        return out

    def compose(self, g: "LinMap") -> "LinMap":
        """self after g."""
        if g.codomain.dim != self.domain.dim:
            raise DimensionMismatch("compose: inner dimensions differ")
        byrow = {}
        for (r, c), v in g.entries.items():
            byrow.setdefault(r, []).append((c, v))
        out = {}
        for (r, c), v in self.entries.items():
            for c2, v2 in byrow.get(c, ()):
                add_term(out, (r, c2), v * v2)
        return LinMap(g.domain, self.codomain, out)

    __matmul__ = compose

    def tensor(self, g: "LinMap") -> "LinMap":
        dcd, dcc = g.codomain.dim, g.domain.dim
        out = {}
        for (r1, c1), v1 in self.entries.items():
            for (r2, c2), v2 in g.entries.items():
                out[(r1 * dcd + r2, c1 * dcc + c2)] = v1 * v2
        return LinMap(self.domain.tensor(g.domain),
                      self.codomain.tensor(g.codomain), out)

    def __add__(self, other: "LinMap") -> "LinMap":
        if (self.domain.dim, self.codomain.dim) != (other.domain.dim, other.codomain.dim):
            raise DimensionMismatch("sum of maps with different shapes")
        out = dict(self.entries)
        for k, v in other.entries.items():
            add_term(out, k, v)
        return LinMap(self.domain, self.codomain, out)

    def __sub__(self, other: "LinMap") -> "LinMap":
        if (self.domain.dim, self.codomain.dim) != (other.domain.dim, other.codomain.dim):
            raise DimensionMismatch("difference of maps with different shapes")
        out = dict(self.entries)
        for k, v in other.entries.items():
            add_term(out, k, -v)
        return LinMap(self.domain, self.codomain, out)

    def scale(self, c) -> "LinMap":
        return LinMap(self.domain, self.codomain,
                      {k: c * v for k, v in self.entries.items()})

    def transpose(self) -> "LinMap":
        return LinMap(self.codomain, self.domain,
                      {(c, r): v for (r, c), v in self.entries.items()})

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.domain.dim == other.domain.dim
                and self.codomain.dim == other.codomain.dim
                and self.entries == other.entries)

    __hash__ = None

    def is_identity(self) -> bool:
        if self.domain.dim != self.codomain.dim:
            return False
        if len(self.entries) != self.domain.dim:
            return False
        return all(self.entries.get((i, i)) == 1 for i in range(self.domain.dim))

    def __repr__(self):
        return (f"LinMap({self.domain.dim}->{self.codomain.dim}, "
                f"nnz={len(self.entries)})")


def tensor(f: LinMap, g: LinMap) -> LinMap:
    return f.tensor(g)


def compose(f: LinMap, g: LinMap) -> LinMap:
    return f.compose(g)


def map_eq(f: LinMap, g: LinMap) -> bool:
    return f == g


def _rref(rows, forbid=None):
    """Sparse Gauss-Jordan elimination over exact scalars.

    rows is an iterable of dicts {col: scalar}.  Returns (reduced, pivots,
    leftover): reduced[i] has a 1 in column pivots[i] and that column is
    zero in every other returned row; leftover collects nonzero rows whose
    support lies entirely in the forbidden column (inconsistent equations
    when forbid marks an augmented right hand side).

    Pivots are chosen greedily for least fill-in: shortest row first, and
    within it the column occurring in the fewest other rows.
    """
    rows = [dict(r) for r in rows if r]
    reduced, pivots, leftover = [], [], []
    while rows:
        best_i = None
        for i, r in enumerate(rows):
            n = len(r) - (1 if forbid is not None and forbid in r else 0)
            if n == 0:
                continue
            if best_i is None or n < best_n:
                best_i, best_n = i, n
                if n == 1:
                    break
        if best_i is None:
            leftover.extend(rows)
            break
        piv_row = rows.pop(best_i)
        candidates = [c for c in piv_row if c != forbid]
        if len(candidates) > 1:
            count = {c: 0 for c in candidates}
            for r in rows:
                for c in candidates:
                    if c in r:
                        count[c] += 1
            piv_col = min(candidates, key=lambda c: count[c])
        else:
            piv_col = candidates[0]
        inv = invert(piv_row[piv_col])
        if inv != 1:
            piv_row = {c: v * inv for c, v in piv_row.items()}
        remaining = []
        for r in rows:
            f = r.get(piv_col)
            if f:
                rr = dict(r)
                for c, v in piv_row.items():
                    add_term(rr, c, -f * v)
                if rr:
                    remaining.append(rr)
            else:
                remaining.append(r)
        rows = remaining
        for r in reduced:
            f = r.get(piv_col)
            if f:
                for c, v in piv_row.items():
                    add_term(r, c, -f * v)
        reduced.append(piv_row)
        pivots.append(piv_col)
    return reduced, pivots, leftover


def _map_rows(f: LinMap):
    rows = {}
    for (r, c), v in f.entries.items():
        rows.setdefault(r, {})[c] = v
    return list(rows.values())


def rank(f: LinMap) -> int:
    _, pivots, _ = _rref(_map_rows(f))
    return len(pivots)


def kernel(f: LinMap) -> "Subspace":
    reduced, pivots, _ = _rref(_map_rows(f))
    pivot_set = set(pivots)
    free = [c for c in range(f.domain.dim) if c not in pivot_set]
    basis = []
    for cf in free:
        vec = {cf: Fraction(1)}
        for row, pc in zip(reduced, pivots):
            v = row.get(cf)
            if v:
                vec[pc] = -v
        basis.append(vec)
    return Subspace.from_span(f.domain, basis)


def image(f: LinMap) -> "Subspace":
    cols = {}
    for (r, c), v in f.entries.items():
        cols.setdefault(c, {})[r] = v
    return Subspace.from_span(f.codomain, list(cols.values()))


def solve(f: LinMap, y: dict):
    """One solution x of f(x) = y, free coordinates set to zero, or None."""
    rhs = f.domain.dim
    rows = {}
    for (r, c), v in f.entries.items():
        rows.setdefault(r, {})[c] = v
    for r, v in y.items():
        if v != 0:
            if not (0 <= r < f.codomain.dim):
                raise DimensionMismatch("right hand side index out of bounds")
            rows.setdefault(r, {})[rhs] = v
    reduced, pivots, leftover = _rref(list(rows.values()), forbid=rhs)
    if leftover:
        return None
    out = {}
    for row, pc in zip(reduced, pivots):
        v = row.get(rhs)
        if v:
            out[pc] = v
    return out


class Subspace:
    """A subspace carried by an inclusion and a one-sided inverse projection."""

    __slots__ = ("ambient", "inclusion", "projection")

    def __init__(self, ambient: VectorSpace, inclusion: LinMap, projection: LinMap):
        if inclusion.codomain.dim != ambient.dim or projection.domain.dim != ambient.dim:
            raise DimensionMismatch("subspace maps do not match the ambient space")
        if inclusion.domain.dim != projection.codomain.dim:
            raise DimensionMismatch("inclusion and projection disagree on the subspace")
        if not projection.compose(inclusion).is_identity():
            raise DimensionMismatch("projection does not retract the inclusion")
        self.ambient = ambient
        self.inclusion = inclusion
        self.projection = projection

    @property
    def dim(self) -> int:
        return self.inclusion.domain.dim

    @property
    def space(self) -> VectorSpace:
        return self.inclusion.domain

    @staticmethod
    def from_span(ambient: VectorSpace, vectors) -> "Subspace":
        """Span of the given coordinate vectors inside ambient."""
        reduced, pivots, _ = _rref(vectors)
        k = len(reduced)
        sub = VectorSpace(k)
        incl = {}
        for j, row in enumerate(reduced):
            for a, v in row.items():
                incl[(a, j)] = v
        proj = {(j, p): Fraction(1) for j, p in enumerate(pivots)}
        return Subspace(ambient, LinMap(sub, ambient, incl),
                        LinMap(ambient, sub, proj))

    @staticmethod
    def full(space: VectorSpace) -> "Subspace":
        ident = LinMap.identity(space)
        return Subspace(space, ident, ident)

    def contains(self, vec: dict) -> bool:
        return self.inclusion(self.projection(vec)) == vec

    def coords(self, vec: dict, check: bool = True) -> dict:
        """Coordinates of an ambient vector lying in the subspace."""
        c = self.projection(vec)
        if check and self.inclusion(c) != vec:
            raise DimensionMismatch("vector is not in the subspace")
        return c

    def embed(self, coords: dict) -> dict:
        return self.inclusion(coords)

    def idempotent(self) -> LinMap:
        return self.inclusion.compose(self.projection)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient.dim})"


def split_idempotent(P: LinMap) -> Subspace:
    """Split an idempotent P as inclusion after projection.

    The returned Subspace satisfies inclusion compose projection = P and
    projection compose inclusion = identity, both exactly.
    """
    if P.domain.dim != P.codomain.dim:
        raise DimensionMismatch("idempotent must be an endomorphism")
    if P.compose(P) != P:
        raise NotIdempotent("map is not idempotent")
    cols = {}
    for (r, c), v in P.entries.items():
        cols.setdefault(c, {})[r] = v
    reduced, pivots, _ = _rref(list(cols.values()))
    k = len(reduced)
    sub = VectorSpace(k)
    incl = {}
    for j, row in enumerate(reduced):
        for a, v in row.items():
            incl[(a, j)] = v
    proj = {}
    by_row = {}
    for (r, c), v in P.entries.items():
        by_row.setdefault(r, {})[c] = v
    for j, p in enumerate(pivots):
        for c, v in by_row.get(p, {}).items():
            proj[(j, c)] = v
    space = Subspace(P.domain, LinMap(sub, P.domain, incl),
                     LinMap(P.domain, sub, proj))
    if space.inclusion.compose(space.projection) != P:
        raise NotIdempotent("idempotent does not factor through its image")
    return space
