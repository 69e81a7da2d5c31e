"""Exact rational polynomials and the Krawtchouk family on the binary Hamming scheme.

Two normalizations of the Krawtchouk polynomials are in play:

* ``krawtchouk_t(n, i)`` is a polynomial in the "inner product" variable
  ``t = 1 - 2d/n`` and takes the value 1 at ``t = 1``;
* ``krawtchouk_z(n, i, z)`` is the classical combinatorial form in the
  distance variable ``z``, with ``K_i(0) = C(n, i)``.

They are linked by ``C(n, i) * Q_i(1 - 2z/n) == K_i(z)``.

Everything here is exact; there is no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import comb, lcm
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]

__all__ = [
    "Rational",
    "RationalPoly",
    "KrawtchoukExpansion",
    "NEG_INF",
    "poly_eval",
    "poly_arith",
    "poly_divmod",
    "krawtchouk_t",
    "krawtchouk_z",
    "domain_tn",
    "annihilator",
    "reduce_mod_tn",
    "expand_in_krawtchouk",
    "adjacent_10",
    "adjacent_11",
    "adjacent_11_explicit",
    "roots_in_tn",
]


class _NegInf:
    """Degree of the zero polynomial."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "-inf"

    def __lt__(self, other):
        return other is not self

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return other is self


NEG_INF = _NegInf()


def _strip(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class RationalPoly:
    """Dense univariate polynomial with `Fraction` coefficients.

    ``coeffs[j]`` is the coefficient of ``t**j``. The zero polynomial has an
    empty coefficient tuple and degree `NEG_INF`.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("RationalPoly is immutable")

    @classmethod
    def const(cls, c: Number) -> "RationalPoly":
        return cls([c])

    @classmethod
    def monomial(cls, j: int, c: Number = 1) -> "RationalPoly":
        return cls([0] * j + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Number]) -> "RationalPoly":
        return reduce(lambda p, r: p * cls([-Fraction(r), 1]), roots, cls([1]))

    T = None  # set below to the identity polynomial t

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __call__(self, t: Number) -> Fraction:
        return poly_eval(self, t)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPoly([other])
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RationalPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            mono = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"({abs(c)})" if c.denominator != 1 else str(abs(c))
                body = body + ("*" + mono if mono else "")
            terms.append(("-" if c < 0 else "+", body))
        s = "".join(f" {sgn} {b}" for sgn, b in terms).strip()
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def _coerce(self, other) -> "RationalPoly":
        if isinstance(other, RationalPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RationalPoly([x + (b[j] if j < len(b) else 0) for j, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalPoly([c * other for c in self.coeffs])
        if not isinstance(other, RationalPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return RationalPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c: Number):
        c = Fraction(c)
        if c == 0:
            raise ZeroDivisionError("polynomial divided by zero scalar")
        return RationalPoly([x / c for x in self.coeffs])

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = RationalPoly([1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def compose(self, inner: "RationalPoly") -> "RationalPoly":
        """Return ``self(inner(t))``."""
        out = RationalPoly()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def reflect(self) -> "RationalPoly":
        """Return ``self(-t)``."""
        return RationalPoly([c if j % 2 == 0 else -c for j, c in enumerate(self.coeffs)])


RationalPoly.T = RationalPoly([0, 1])


@dataclass(frozen=True)
class KrawtchoukExpansion:
    """Coordinates ``f_0, ..., f_m`` of a polynomial in the basis ``Q_j^{(n)}``."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) > self.n + 1:
            raise ValueError("expansion longer than n+1")

    def __getitem__(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def to_poly(self) -> RationalPoly:
        out = RationalPoly()
        for j, c in enumerate(self.coeffs):
            if c:
                out = out + krawtchouk_t(self.n, j) * c
        return out


def poly_eval(p: RationalPoly, t: Number) -> Fraction:
    """Horner evaluation."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def poly_arith(a: RationalPoly, b: RationalPoly | None, op: str, c: Number | None = None) -> RationalPoly:
    """Dispatch ``add``, ``sub``, ``mul`` or ``scale`` (``a * c``; `b` ignored)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        if c is None:
            raise ValueError("scale needs a scalar")
        return a * Fraction(c)
    raise ValueError(f"unknown op {op!r}")


def poly_divmod(a: RationalPoly, b: RationalPoly) -> tuple[RationalPoly, RationalPoly]:
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    lead = b.coeffs[-1]
    if len(rem) - 1 < db:
        return RationalPoly(), RationalPoly(rem)
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        q = rem[k + db] / lead
        quot[k] = q
        if q:
            for j, bc in enumerate(b.coeffs):
                rem[k + j] -= q * bc
    return RationalPoly(quot), RationalPoly(rem[:db])


def _check_index(i: int, lo: int, hi: int, what: str):
    if not (isinstance(i, int) and lo <= i <= hi):
        raise ValueError(f"{what}: index {i} outside {lo}..{hi}")


def _check_n(n: int):
    if not (isinstance(n, int) and n >= 1):
        raise ValueError(f"length n must be a positive integer, got {n!r}")


@lru_cache(maxsize=64)
def _krawtchouk_table(n: int) -> tuple[RationalPoly, ...]:
    # n t Q_i = (n - i) Q_{i+1} + i Q_{i-1}
    qs = [RationalPoly([1]), RationalPoly([0, 1])]
    nt = RationalPoly([0, n])
    for i in range(1, n):
        qs.append((nt * qs[i] - qs[i - 1] * i) / (n - i))
    return tuple(qs[: n + 1])


def krawtchouk_t(n: int, i: int) -> RationalPoly:
    """Krawtchouk polynomial ``Q_i^{(n)}(t)``, normalized by ``Q_i(1) = 1``."""
    _check_n(n)
    _check_index(i, 0, n, "krawtchouk_t")
    return _krawtchouk_table(n)[i]


def binom_general(x: Number, j: int) -> Fraction:
    """``C(x, j)`` as the falling factorial ``x(x-1)...(x-j+1)/j!``."""
    if j < 0:
        return Fraction(0)
    num = Fraction(1)
    for r in range(j):
        num *= Fraction(x) - r
    den = 1
    for r in range(2, j + 1):
        den *= r
    return num / den


def _binom_poly(p: RationalPoly, j: int) -> RationalPoly:
    """``C(p(t), j)`` as a polynomial in t."""
    out = RationalPoly([1])
    for r in range(j):
        out = out * (p - r)
    fac = 1
    for r in range(2, j + 1):
        fac *= r
    return out / fac


def krawtchouk_z(n: int, i: int, z: Number) -> Fraction:
    """Classical binary Krawtchouk value ``K_i^{(n)}(z)`` by the alternating sum."""
    _check_index(i, 0, n, "krawtchouk_z")
    return sum(
        ((-1) ** j * binom_general(z, j) * binom_general(n - Fraction(z), i - j) for j in range(i + 1)),
        Fraction(0),
    )


def domain_tn(n: int) -> list[Fraction]:
    """The n+1 points ``-1 + 2i/n`` in increasing order."""
    _check_n(n)
    return [Fraction(-1) + Fraction(2 * i, n) for i in range(n + 1)]


def annihilator(n: int) -> RationalPoly:
    """``prod_i (t - t_i)`` over the points of ``T_n``."""
    return RationalPoly.from_roots(domain_tn(n))


def reduce_mod_tn(f: RationalPoly, n: int) -> RationalPoly:
    """Reduce `f` modulo the annihilator of T_n when its degree exceeds n."""
    if f.is_zero() or f.degree <= n:
        return f
    return poly_divmod(f, annihilator(n))[1]


def expand_in_krawtchouk(f: RationalPoly, n: int) -> KrawtchoukExpansion:
    """Coordinates of `f` (as a function on T_n) in the basis ``Q_0..Q_n``.

    Uses the discrete inner product with binomial weights, so no explicit
    reduction is needed to get the right answer; the reduction only matters
    for returning a polynomial, which `KrawtchoukExpansion.to_poly` does.
    """
    _check_n(n)
    f = reduce_mod_tn(f, n)
    ts = domain_tn(n)
    weights = [comb(n, i) for i in range(n + 1)]
    values = [w * poly_eval(f, t) for w, t in zip(weights, ts)]
    qs = _krawtchouk_table(n)
    top = n if f.is_zero() else min(n, f.degree)
    coeffs = []
    for j in range(top + 1):
        s = sum((v * poly_eval(qs[j], t) for v, t in zip(values, ts)), Fraction(0))
        coeffs.append(s * comb(n, j) / 2**n)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return KrawtchoukExpansion(n, tuple(coeffs))


def adjacent_10(n: int, i: int) -> RationalPoly:
    """(1,0)-adjacent polynomial ``T_i(t, 1) / T_i(1, 1)``.

    ``T_i(u, v) = sum_{j<=i} C(n, j) Q_j(u) Q_j(v)`` is the Christoffel-Darboux
    kernel of the Krawtchouk family; ``Q_j(1) = 1`` collapses ``T_i(t, 1)``.
    """
    _check_n(n)
    _check_index(i, 0, n - 1, "adjacent_10")
    qs = _krawtchouk_table(n)
    num = RationalPoly()
    for j in range(i + 1):
        num = num + qs[j] * comb(n, j)
    return num / sum(comb(n, j) for j in range(i + 1))


def _kernel10_weight(n: int, j: int) -> Fraction:
    return Fraction(sum(comb(n, u) for u in range(j + 1)) ** 2, comb(n - 1, j))


def adjacent_11(n: int, i: int) -> RationalPoly:
    """(1,1)-adjacent polynomial through the kernel of the (1,0) family.

    ``Q_i^{1,1}(t) = T^{1,0}_i(t, -1) / T^{1,0}_i(1, -1)`` with
    ``T^{1,0}_i(x, y) = sum_{j<=i} w_j Q_j^{1,0}(x) Q_j^{1,0}(y)`` and
    ``w_j = (sum_{u<=j} C(n, u))**2 / C(n-1, j)``.
    """
    _check_n(n)
    _check_index(i, 0, n - 2, "adjacent_11")
    num = RationalPoly()
    den = Fraction(0)
    for j in range(i + 1):
        p = adjacent_10(n, j)
        c = _kernel10_weight(n, j) * poly_eval(p, -1)
        num = num + p * c
        den += c * poly_eval(p, 1)
    return num / den


def _adjacent_11_explicit(n: int, i: int) -> RationalPoly:
    # K_i^{(n-2)}(z - 1) / sum_{j<=i} C(n-1, j), z = n(1 - t)/2
    w = RationalPoly([Fraction(n, 2) - 1, Fraction(-n, 2)])  # z - 1
    rest = RationalPoly([n - 2]) - w  # (n - 2) - (z - 1)
    num = RationalPoly()
    for j in range(i + 1):
        term = _binom_poly(w, j) * _binom_poly(rest, i - j)
        num = num + (term if j % 2 == 0 else -term)
    return num / sum(comb(n - 1, j) for j in range(i + 1))


def adjacent_11_explicit(n: int, i: int) -> RationalPoly:
    """(1,1)-adjacent polynomial from the shifted Krawtchouk formula.

    ``Q_i^{1,1}(t) = K_i^{(n-2)}(z - 1) / sum_{j<=i} C(n-1, j)`` where
    ``z = n(1 - t)/2``. Even for even `i`, odd for odd `i`.
    """
    _check_n(n)
    _check_index(i, 0, n - 2, "adjacent_11_explicit")
    return _adjacent_11_explicit(n, i)


def roots_in_tn(p: RationalPoly, n: int) -> list[Fraction]:
    """Points of T_n at which `p` vanishes, increasing."""
    if p.is_zero():
        return domain_tn(n)
    # n^d L p((x)/n) is an integer polynomial in x = 2i - n
    d = p.degree
    L = lcm(*(c.denominator for c in p.coeffs))
    ints = [int(c * L) * n ** (d - j) for j, c in enumerate(p.coeffs)]
    out = []
    for i in range(n + 1):
        x, acc = 2 * i - n, 0
        for c in reversed(ints):
            acc = acc * x + c
        if acc == 0:
            out.append(Fraction(x, n))
    return out


def gram(n: int, j: int, l: int) -> Fraction:
    """``sum_i C(n, i) Q_j(t_i) Q_l(t_i)``; used by the orthogonality tests."""
    qs = _krawtchouk_table(n)
    return sum(
        (comb(n, i) * poly_eval(qs[j], t) * poly_eval(qs[l], t) for i, t in enumerate(domain_tn(n))),
        Fraction(0),
    )


def as_fractions(xs: Sequence[Number]) -> list[Fraction]:
    return [Fraction(x) for x in xs]
