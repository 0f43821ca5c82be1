"""Exact scalars: rationals and cyclotomic field elements.

Every coefficient in this package is either a fractions.Fraction or a
Cyclo, a residue modulo the cyclotomic polynomial of some fixed order N.
Arithmetic is exact, results are canonically reduced, and equality is
decidable, so the identity checks in the higher modules run with zero
tolerance.

Cyclo values whose residue happens to be a rational constant are demoted
to plain Fractions on construction.  Rational subexpressions therefore
stay cheap even when the ambient field is cyclotomic, and a scalar equal
to a rational number is always represented by the Fraction itself.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class FieldMismatch(TypeError):
    """Two scalars from incompatible fields met in one operation."""


class DivisionByZero(ZeroDivisionError):
    """Inversion or division by the zero scalar."""


class ScalarSyntaxError(ValueError):
    """A scalar string does not match the scalar grammar."""


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant term first.

    Computed by exact division: x^n - 1 divided by the cyclotomic
    polynomials of all proper divisors of n.
    """
    if n < 1:
        raise ValueError("order must be a positive integer")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div(num, den):
    # long division of integer polynomials, constant term first; den is monic
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for i, dc in enumerate(den):
                num[k + i] -= c * dc
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return out


def _reduce_mod_phi(order, coeffs):
    """Reduce a coefficient list (constant first) modulo the cyclotomic polynomial."""
    phi = cyclotomic_polynomial(order)
    d = len(phi) - 1
    cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
    for k in range(len(cs) - 1, d - 1, -1):
        c = cs[k]
        if c:
            for i in range(d):
                cs[k - d + i] -= c * phi[i]
    del cs[d:]
    cs.extend([Fraction(0)] * (d - len(cs)))
    return cs


def _polydivmod(num, den):
    # division with remainder over Fraction coefficients, constant term first
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    dd = len(den) - 1
    if len(num) <= dd:
        return [], num
    lead = den[-1]
    out = [Fraction(0)] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd] / lead
        out[k] = c
        if c:
            for i, dc in enumerate(den):
                num[k + i] -= c * dc
    del num[dd:]
    while num and num[-1] == 0:
        num.pop()
    return out, num


class Cyclo:
    """An element of Q(w), with w a primitive root of unity of the given order.

    Instances are immutable and always non-constant: constant residues are
    demoted to Fraction by the constructors, so a live Cyclo is never equal
    to any rational number.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        cs = _reduce_mod_phi(order, coeffs)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Cyclo values are immutable")

    @staticmethod
    def make(order, coeffs):
        """Reduce, then return a Fraction when the residue is constant."""
        cs = _reduce_mod_phi(order, coeffs)
        if all(c == 0 for c in cs[1:]):
            return cs[0]
        obj = object.__new__(Cyclo)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", tuple(cs))
        return obj

    def _lift(self, other):
        if isinstance(other, Cyclo):
            if other.order != self.order:
                raise FieldMismatch(
                    f"cyclotomic orders differ: {self.order} vs {other.order}")
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) + (Fraction(0),) * (len(self.coeffs) - 1)
        return None

    def __add__(self, other):
        cs = self._lift(other)
        if cs is None:
            return NotImplemented
        return Cyclo.make(self.order, [a + b for a, b in zip(self.coeffs, cs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclo.make(self.order, [-a for a in self.coeffs])

    def __sub__(self, other):
        cs = self._lift(other)
        if cs is None:
            return NotImplemented
        return Cyclo.make(self.order, [a - b for a, b in zip(self.coeffs, cs)])

    def __rsub__(self, other):
        cs = self._lift(other)
        if cs is None:
            return NotImplemented
        return Cyclo.make(self.order, [b - a for a, b in zip(self.coeffs, cs)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Fraction(0)
            return Cyclo.make(self.order, [a * other for a in self.coeffs])
        cs = self._lift(other)
        if cs is None:
            return NotImplemented
        out = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(cs):
                    if b:
                        out[i + j] += a * b
        return Cyclo.make(self.order, out)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm."""
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = phi, list(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while True:
            while r1 and r1[-1] == 0:
                r1.pop()
            if len(r1) <= 1:
                break
            q, rem = _polydivmod(r0, r1)
            r0, r1 = r1, rem
            qs = _polymulsub(s0, q, s1)
            s0, s1 = s1, qs
        if not r1:
            raise DivisionByZero("zero has no inverse")
        c = r1[0]
        return Cyclo.make(self.order, [s / c for s in s1])

    def __truediv__(self, other):
        return self * invert(other)

    def __rtruediv__(self, other):
        inv = self.inverse()
        return inv * other

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Fraction(1)
        base = self
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.order == other.order and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return True

    def __repr__(self):
        return render_scalar(self)


def _polymulsub(s0, q, s1):
    # s0 - q*s1 over Fraction coefficients
    out = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
    for i, a in enumerate(q):
        if a:
            for j, b in enumerate(s1):
                if b:
                    out[i + j] -= a * b
    return out


def omega(order: int):
    """A primitive root of unity of the given order (a Fraction when order <= 2)."""
    return Cyclo.make(order, [0, 1])


def invert(s):
    """Multiplicative inverse of a scalar."""
    if isinstance(s, Cyclo):
        return s.inverse()
    if isinstance(s, int):
        s = Fraction(s)
    if isinstance(s, Fraction):
        if s == 0:
            raise DivisionByZero("zero has no inverse")
        return 1 / s
    raise TypeError(f"not a scalar: {s!r}")


class Field:
    """Descriptor of the coefficient field: Q, or Q(w) with w of a fixed order."""

    __slots__ = ("order",)

    def __init__(self, order: int | None = None):
        if order is not None and order < 1:
            raise ValueError("cyclotomic order must be positive")
        self.order = order

    @property
    def is_cyclotomic(self) -> bool:
        return self.order is not None

    def omega(self):
        if self.order is None:
            raise FieldMismatch("the rational field has no distinguished root of unity")
        return omega(self.order)

    def coerce(self, x):
        """Accept a scalar belonging to this field, embedding rationals."""
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, Fraction):
            return x
        if isinstance(x, Cyclo):
            if self.order is None or x.order != self.order:
                raise FieldMismatch(
                    f"scalar of order {x.order} does not live in {self}")
            return x
        raise TypeError(f"not a scalar: {x!r}")

    def __eq__(self, other):
        return isinstance(other, Field) and self.order == other.order

    def __hash__(self):
        return hash(("Field", self.order))

    def __repr__(self):
        if self.order is None:
            return "Field(Q)"
        return f"Field(Q(w), order={self.order})"

    def to_json(self):
        if self.order is None:
            return {"type": "rational"}
        return {"type": "cyclotomic", "order": self.order}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "type" not in obj:
            raise ScalarSyntaxError(f"bad field descriptor: {obj!r}")
        if obj["type"] == "rational":
            return cls()
        if obj["type"] == "cyclotomic":
            order = obj.get("order")
            if not isinstance(order, int) or order < 1:
                raise ScalarSyntaxError(f"bad cyclotomic order: {order!r}")
            return cls(order)
        raise ScalarSyntaxError(f"unknown field type: {obj['type']!r}")


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", int(text[i:j])))
            i = j
            continue
        if c == "w":
            toks.append(("w", None))
            i += 1
            continue
        if c in "+-*/^":
            toks.append((c, None))
            i += 1
            continue
        raise ScalarSyntaxError(f"unexpected character {c!r} in scalar text")
    return toks


def parse_scalar(text: str, field: Field):
    """Parse a scalar string.

    Grammar: scalar := term (('+'|'-') term)*;
    term := rational ('*' 'w' ('^' int)?)? | 'w' ('^' int)?;
    rational := int ('/' posint)?.
    Exponents are reduced modulo the field order, so any integer exponent
    is accepted in a cyclotomic field.
    """
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos][0] if pos < len(toks) else None

    def take(kind):
        nonlocal pos
        if peek() != kind:
            raise ScalarSyntaxError(f"expected {kind!r} at token {pos} of {text!r}")
        tok = toks[pos]
        pos += 1
        return tok[1]

    def parse_signed_int():
        neg = False
        if peek() == "-":
            take("-")
            neg = True
        v = take("int")
        return -v if neg else v

    def parse_rational(neg):
        a = take("int")
        if neg:
            a = -a
        if peek() == "/":
            take("/")
            b = take("int")
            if b == 0:
                raise ScalarSyntaxError("zero denominator")
            return Fraction(a, b)
        return Fraction(a)

    def parse_wpow():
        take("w")
        if field.order is None:
            raise ScalarSyntaxError("'w' is not a scalar of the rational field")
        k = 1
        if peek() == "^":
            take("^")
            k = parse_signed_int()
        k %= field.order
        return Cyclo.make(field.order, [0] * k + [1])

    def parse_term(neg):
        if peek() == "int":
            r = parse_rational(neg)
            if peek() == "*":
                take("*")
                return r * parse_wpow()
            return r
        if peek() == "w":
            v = parse_wpow()
            return -v if neg else v
        raise ScalarSyntaxError(f"expected a term at token {pos} of {text!r}")

    neg = False
    if peek() == "-":
        take("-")
        neg = True
    elif peek() == "+":
        take("+")
    value = parse_term(neg)
    while peek() in ("+", "-"):
        op = peek()
        take(op)
        t = parse_term(False)
        value = value + t if op == "+" else value - t
    if pos != len(toks):
        raise ScalarSyntaxError(f"trailing tokens in scalar text {text!r}")
    return field.coerce(value)


def _render_fraction(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def render_scalar(s) -> str:
    """Canonical text form; parse_scalar inverts it exactly."""
    if isinstance(s, int):
        s = Fraction(s)
    if isinstance(s, Fraction):
        return _render_fraction(s)
    if not isinstance(s, Cyclo):
        raise TypeError(f"not a scalar: {s!r}")
    parts = []
    for k, c in enumerate(s.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _render_fraction(mag)
        else:
            name = "w" if k == 1 else f"w^{k}"
            body = name if mag == 1 else f"{_render_fraction(mag)}*{name}"
        parts.append((c < 0, body))
    if not parts:
        return "0"
    out = []
    for i, (negative, body) in enumerate(parts):
        if i == 0:
            out.append("-" + body if negative else body)
        else:
            out.append(("-" if negative else "+") + body)
    return "".join(out)
