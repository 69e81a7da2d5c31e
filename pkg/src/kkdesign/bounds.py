"""Linear programming bounds for (k,k)-designs, tightness checks and screens.

A polynomial f certifies ``|C| >= f(1)/f_0`` for every (k,k)-design C in
F_2^n when ``f >= 0`` on T_n, ``f_0 > 0`` and ``f_j <= 0`` for every odd
``j <= 2k-1`` and every ``j >= 2k+1`` (coordinates in the Krawtchouk basis).
The even coordinates ``f_2, ..., f_2k`` are unconstrained because the
corresponding moments vanish on a (k,k)-design.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt
from typing import Any

from .algebra import (
    KrawtchoukExpansion,
    RationalPoly,
    _adjacent_11_explicit,
    _krawtchouk_table,
    domain_tn,
    expand_in_krawtchouk,
    poly_eval,
    reduce_mod_tn,
    roots_in_tn,
)
from .codes import BinaryCode, distance_distribution, inner_product, kk_level, moments
from .simplex import linprog_max

__all__ = [
    "Check",
    "Membership",
    "BoundReport",
    "FeasibilityReport",
    "TightnessReport",
    "frac_str",
    "universal_bound",
    "rao_bound",
    "tight_polynomial",
    "class_membership",
    "lp_identity_check",
    "bound_from_polynomial",
    "universal_certificate",
    "lp_optimize",
    "tightness_certificate",
    "screen_tight",
]


def frac_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _jsonable(v):
    if isinstance(v, Fraction):
        return frac_str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        items = sorted(v) if isinstance(v, (set, frozenset)) else v
        return [_jsonable(x) for x in items]
    return v


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: Any = None
    source: str = ""
    counts: bool = True  # False for informational rows that never decide a verdict

    def to_dict(self) -> dict:
        d = {"name": self.name, "pass": self.passed, "witness": _jsonable(self.witness)}
        if self.source:
            d["source"] = self.source
        if not self.counts:
            d["informational"] = True
        return d


def _check_range(n: int, k: int):
    if not (isinstance(n, int) and n >= 2):
        raise ValueError(f"n must be an integer >= 2, got {n!r}")
    if not (isinstance(k, int) and 1 <= k <= n // 2):
        raise ValueError(f"k must satisfy 1 <= k <= n/2, got n={n}, k={k}")


def universal_bound(n: int, k: int) -> int:
    """``sum_{i<=k} C(n-1, i)``, the minimum size of a (k,k)-design up to tightness."""
    _check_range(n, k)
    return sum(comb(n - 1, i) for i in range(k + 1))


def rao_bound(n: int, k: int) -> int:
    """Rao's lower bound ``2 sum_{i<=k} C(n-1, i)`` for orthogonal arrays of strength 2k+1."""
    return 2 * universal_bound(n, k)


def tight_polynomial(n: int, k: int) -> RationalPoly:
    """``Q_k^{1,1}`` at length n; also covers the corner ``n = 2, k = 1`` where it equals t."""
    _check_range(n, k)
    return _adjacent_11_explicit(n, k)


@dataclass(frozen=True)
class Membership:
    """Outcome of testing f against the class F_{n,k}."""

    n: int
    k: int
    expansion: KrawtchoukExpansion
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def violation(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)


def class_membership(f: RationalPoly, n: int, k: int) -> Membership:
    _check_range(n, k)
    g = reduce_mod_tn(f, n)
    exp = expand_in_krawtchouk(g, n)
    checks = []
    for t in domain_tn(n):
        v = poly_eval(g, t)
        checks.append(Check(f"f({t}) >= 0", v >= 0, v))
    checks.append(Check("f_0 > 0", exp[0] > 0, exp[0]))
    for j in range(1, n + 1):
        if j % 2 == 1 and j <= 2 * k - 1 or j >= 2 * k + 1:
            checks.append(Check(f"f_{j} <= 0", exp[j] <= 0, exp[j]))
    return Membership(n, k, exp, tuple(checks))


def lp_identity_check(code: BinaryCode, f: RationalPoly) -> tuple[Fraction, Fraction]:
    """Both sides of ``|C| f(1) + sum_{x != y} f(<x,y>) = |C|^2 f_0 + sum_i f_i M_i``.

    The left side walks all ordered pairs of distinct positions; the right side
    goes through the Krawtchouk expansion and the moment vector.
    """
    n, size = code.n, len(code)
    ws = code.words
    f_at = {}  # distance -> f(1 - 2d/n)
    lhs = size * poly_eval(f, 1)
    for a in range(size):
        for b in range(size):
            if a != b:
                d = (ws[a] ^ ws[b]).bit_count()
                if d not in f_at:
                    f_at[d] = poly_eval(f, inner_product(ws[a], ws[b], n))
                lhs += f_at[d]
    exp = expand_in_krawtchouk(f, n)
    mv = moments(code)
    rhs = size * size * exp[0] + sum((exp[i] * mv[i] for i in range(1, len(exp))), Fraction(0))
    return lhs, rhs


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    bound: Fraction
    certificate: RationalPoly
    expansion: KrawtchoukExpansion
    checks: tuple[Check, ...]
    method: str = "polynomial"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "bound": frac_str(self.bound),
            "method": self.method,
            "certificate": {
                "monomial": [frac_str(c) for c in self.certificate.coeffs],
                "krawtchouk": [frac_str(c) for c in self.expansion.coeffs],
            },
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


class NotInClass(ValueError):
    def __init__(self, membership: Membership):
        self.membership = membership
        v = membership.violation
        super().__init__(f"polynomial is not in F_(n={membership.n},k={membership.k}): {v.name} fails (value {v.witness})")


def bound_from_polynomial(f: RationalPoly, n: int, k: int, method: str = "polynomial") -> BoundReport:
    mem = class_membership(f, n, k)
    if not mem.ok:
        raise NotInClass(mem)
    g = reduce_mod_tn(f, n)
    return BoundReport(n, k, poly_eval(g, 1) / mem.expansion[0], g, mem.expansion, mem.checks, method)


def universal_certificate(n: int, k: int) -> BoundReport:
    """Bound report for ``f = (Q_k^{1,1})^2``."""
    return bound_from_polynomial(tight_polynomial(n, k) ** 2, n, k, method="universal")


def lp_optimize(n: int, k: int, degree: int | None = None) -> BoundReport:
    """Best LP bound over polynomials of degree at most `degree` (default 2k).

    Fixes ``f_0 = 1`` and maximizes ``f(1) = sum_j f_j``; even ``f_j`` with
    ``j <= 2k`` are split into two nonnegative parts, the sign-constrained
    coordinates enter as ``g_j = -f_j >= 0``.
    """
    _check_range(n, k)
    D = 2 * k if degree is None else degree
    if not 2 * k <= D <= n:
        raise ValueError(f"degree cap must satisfy 2k <= D <= n, got D={D}")
    qs = _krawtchouk_table(n)
    cols = []  # (j, sign) meaning f_j contributes sign * var
    for j in range(1, D + 1):
        if j % 2 == 0 and j <= 2 * k:
            cols += [(j, 1), (j, -1)]
        else:
            cols.append((j, -1))
    c = [sign for _, sign in cols]
    A, b = [], []
    for t in domain_tn(n):
        A.append([-sign * poly_eval(qs[j], t) for j, sign in cols])
        b.append(1)
    res = linprog_max(c, A, b)
    coeffs = [Fraction(0)] * (D + 1)
    coeffs[0] = Fraction(1)
    for (j, sign), x in zip(cols, res.x):
        coeffs[j] += sign * x
    f = KrawtchoukExpansion(n, tuple(coeffs)).to_poly()
    rep = bound_from_polynomial(f, n, k, method=f"lp(D={D})")
    if rep.bound != 1 + res.value:
        raise AssertionError("LP objective and certificate disagree")
    return rep


@dataclass(frozen=True)
class TightnessReport:
    n: int
    k: int
    size: int
    inner_products: tuple[Fraction, ...]
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "size": self.size,
            "tight": self.ok,
            "inner_products": [frac_str(t) for t in self.inner_products],
            "checks": [c.to_dict() for c in self.checks],
        }


def tightness_certificate(code: BinaryCode, k: int) -> TightnessReport:
    """Check that `code` is a tight (k,k)-design.

    Items: (k,k)-design, size equals the universal bound, every distinct-pair
    inner product is a root of ``Q_k^{1,1}``, no repeated words, and
    ``4**k`` divides the size (skipped when ``2k + 1 > n``).
    """
    n, size = code.n, len(code)
    dist = distance_distribution(code)
    ips = tuple(sorted(1 - Fraction(2 * d, n) for d in range(1, n + 1) if dist.counts[d]))
    if not (isinstance(k, int) and 1 <= k <= n // 2):
        return TightnessReport(n, k, size, ips, (Check("parameters", False, {"n": n, "k": k}),))
    mv = moments(code, dist)
    level = kk_level(code, mv)
    bound = universal_bound(n, k)
    q = tight_polynomial(n, k)
    bad_ips = [t for t in ips if poly_eval(q, t) != 0]
    dup = code.has_duplicates()
    checks = [
        Check("kk_design", level >= k, {"kk_level": level, "M": {2 * j: mv[2 * j] for j in range(1, k + 1)}}),
        Check("size_equals_bound", size == bound, {"size": size, "bound": bound}),
        Check("inner_products_are_roots", not bad_ips, {"non_roots": bad_ips}),
        Check("duplicate_free", not dup, {"distinct": len(set(code.words))}),
    ]
    if 2 * k + 1 <= n:
        checks.append(Check("divisible_by_4^k", size % 4**k == 0, {"size": size, "modulus": 4**k}))
    else:
        checks.append(Check("divisible_by_4^k", True, "not applicable: 2k+1 > n", counts=False))
    return TightnessReport(n, k, size, ips, tuple(checks))


@dataclass(frozen=True)
class FeasibilityReport:
    n: int
    k: int
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def verdict(self) -> str:
        return "excluded" if any(c.counts and not c.passed for c in self.checks) else "open"

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "verdict": self.verdict, "checks": [c.to_dict() for c in self.checks]}


K2_RESIDUES = frozenset({2, 5, 6, 10, 11, 14})


def _square_root(x: int) -> int | None:
    if x < 0:
        return None
    r = isqrt(x)
    return r if r * r == x else None


def root_screen(n: int, k: int) -> tuple[bool, list[Fraction]]:
    """Do the roots of ``Q_k^{1,1}`` that a tight design must realize lie in T_n?

    Every nonzero root is required, and at least one root overall. The root
    t = 0 of odd k is exempt: at odd n it is not in T_n, and the design may
    simply avoid distance n/2.
    """
    roots = roots_in_tn(tight_polynomial(n, k), n)
    nonzero = sum(1 for t in roots if t != 0)
    return nonzero == k - k % 2 and bool(roots), roots


def screen_tight(n: int, k: int) -> FeasibilityReport:
    """Necessary conditions for a tight (k,k)-design in F_2^n.

    Generic rows: divisibility of the bound by ``4**k`` and the roots of
    ``Q_k^{1,1}`` lying in T_n (see `root_screen`). For k = 1, 2, 3 the closed-form residue and
    perfect-square conditions are added; they are consequences of the generic
    rows and act as an arithmetic cross-check.
    """
    _check_range(n, k)
    bound = universal_bound(n, k)
    checks = []
    if 2 * k + 1 <= n:
        checks.append(
            Check("bound_divisible_by_4^k", bound % 4**k == 0, {"bound": bound, "modulus": 4**k, "residue": bound % 4**k}, "divisibility")
        )
    else:
        checks.append(Check("bound_divisible_by_4^k", True, "not applicable: 2k+1 > n", "divisibility", counts=False))
    ok, roots = root_screen(n, k)
    label = "closed-form" if k <= 3 else "derived"
    checks.append(Check("roots_in_T_n", ok, {"degree": k, "roots_in_T_n": roots}, label))
    if k % 2:
        # 0 is always a root for odd k but lies in T_n only for even n; a tight
        # design need not realize it, so this row does not exclude
        checks.append(Check("zero_root_in_T_n", n % 2 == 0, {"n mod 2": n % 2}, label, counts=False))

    if k == 1 and n >= 3:
        checks.append(Check("n = 0 mod 4", n % 4 == 0, {"n mod 4": n % 4}, "closed-form"))
        if n % 4 == 0:
            from .constructions import hadamard_of_order

            try:
                hadamard_of_order(n)
                known = True
            except ValueError:
                known = False
            checks.append(Check("hadamard_construction_available", known, {"order": n}, "closed-form", counts=False))
    elif k == 2:
        val = n * n - n + 2
        checks.append(Check("32 | n^2-n+2", val % 32 == 0, {"n^2-n+2 mod 32": val % 32}, "closed-form"))
        checks.append(Check("n = 6 or 27 mod 32", n % 32 in (6, 27), {"n mod 32": n % 32}, "closed-form"))
        m = _square_root(n - 2)
        checks.append(Check("n-2 is a square", m is not None, {"n-2": n - 2, "m": m}, "closed-form"))
        if m is not None:
            checks.append(Check("m mod 16 allowed", m % 16 in K2_RESIDUES, {"m mod 16": m % 16}, "closed-form"))
            checks.append(Check("m >= 3", m >= 3, {"m": m}, "closed-form", counts=False))
    elif k == 3:
        val = n * (n * n - 3 * n + 8)
        checks.append(Check("128 | n(n^2-3n+8)", val % 128 == 0, {"residue": val % 128}, "closed-form"))
        checks.append(Check("n = 0 mod 8 or 107 mod 128", n % 8 == 0 or n % 128 == 107, {"n mod 128": n % 128}, "closed-form"))
        m = _square_root(3 * n - 8)
        checks.append(Check("3n-8 is a square", m is not None, {"3n-8": 3 * n - 8, "m": m}, "closed-form"))
        if m is not None and n % 8 == 0:
            checks.append(Check("n = 8 mod 16", n % 16 == 8, {"n mod 16": n % 16}, "closed-form"))
            checks.append(Check("m = 0 mod 4", m % 4 == 0, {"m mod 4": m % 4}, "closed-form"))
            checks.append(Check("m != 0 mod 3", m % 3 != 0, {"m mod 3": m % 3}, "closed-form"))
        elif m is not None and n % 128 == 107:
            checks.append(Check("m = 21 or 43 mod 64", m % 64 in (21, 43), {"m mod 64": m % 64}, "closed-form"))
    return FeasibilityReport(n, k, tuple(checks))
