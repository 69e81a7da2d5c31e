"""Explicit design families: even-weight codes, Hadamard codes, the Golay code."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .codes import BinaryCode, antipodal_halve, design_strength, is_antipodal, moments

__all__ = [
    "HadamardMatrix",
    "even_weight_code",
    "sylvester_hadamard",
    "paley_hadamard",
    "hadamard_to_tight11",
    "code_to_pm1",
    "GOLAY_B",
    "golay24",
    "golay_selfcheck",
    "construct_tight_kk",
]


@dataclass(frozen=True)
class HadamardMatrix:
    """+-1 matrix with ``H H^T = order * I``; checked on construction."""

    entries: np.ndarray

    def __post_init__(self):
        h = np.asarray(self.entries, dtype=np.int64)
        if h.ndim != 2 or h.shape[0] != h.shape[1]:
            raise ValueError("Hadamard matrix must be square")
        if not np.all(np.abs(h) == 1):
            raise ValueError("entries must be +1 or -1")
        m = h.shape[0]
        if not np.array_equal(h @ h.T, m * np.eye(m, dtype=np.int64)):
            raise ValueError("rows are not orthogonal")
        h.setflags(write=False)
        object.__setattr__(self, "entries", h)

    @property
    def order(self) -> int:
        return self.entries.shape[0]


def even_weight_code(n: int) -> BinaryCode:
    """All 2**(n-1) words of even weight, in increasing order."""
    if n < 2 or n % 2:
        raise ValueError(f"even-weight family needs even n >= 2, got {n}")
    return BinaryCode(n, tuple(w for w in range(1 << n) if w.bit_count() % 2 == 0))


def sylvester_hadamard(m: int) -> HadamardMatrix:
    if m < 0:
        raise ValueError("m must be >= 0")
    h = np.array([[1]], dtype=np.int64)
    for _ in range(m):
        h = np.block([[h, h], [h, -h]])
    return HadamardMatrix(h)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def paley_hadamard(q: int) -> HadamardMatrix:
    """Paley type I matrix of order q+1 for a prime ``q = 3 (mod 4)``."""
    if not _is_prime(q):
        raise ValueError(f"{q} is not prime")
    if q % 4 != 3:
        raise ValueError(f"Paley type I needs q = 3 mod 4, got q = {q}")
    squares = {(x * x) % q for x in range(1, q)}
    chi = [0] + [1 if a in squares else -1 for a in range(1, q)]
    jac = np.array([[chi[(j - i) % q] for j in range(q)] for i in range(q)], dtype=np.int64)
    s = np.zeros((q + 1, q + 1), dtype=np.int64)
    s[0, 1:] = 1
    s[1:, 0] = -1
    s[1:, 1:] = jac
    return HadamardMatrix(np.eye(q + 1, dtype=np.int64) + s)


def hadamard_to_tight11(h: HadamardMatrix) -> BinaryCode:
    """Rows of `h` as binary words, +1 -> 1 and -1 -> 0."""
    n = h.order
    if n % 4:
        raise ValueError(f"order {n} is not divisible by 4")
    words = []
    for row in h.entries:
        w = 0
        for e in row:
            w = (w << 1) | (1 if e == 1 else 0)
        words.append(w)
    return BinaryCode(n, tuple(words))


def code_to_pm1(code: BinaryCode) -> np.ndarray:
    """Inverse of `hadamard_to_tight11`: 1 -> +1, 0 -> -1."""
    return 2 * code.to_matrix().astype(np.int64) - 1


# Right half of the systematic generator [I_12 | B]: a bordered 11x11 circulant
# whose first row marks 0 and the quadratic non-residues mod 11.
GOLAY_B = (
    "011111111111",
    "110100011101",
    "111010001110",
    "101101000111",
    "110110100011",
    "111011010001",
    "111101101000",
    "101110110100",
    "100111011010",
    "100011101101",
    "110001110110",
    "101000111011",
)

GOLAY_WEIGHTS = {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


class ConstructionError(RuntimeError):
    """A built object failed its own verification."""


def _golay_words() -> list[int]:
    gens = [(1 << (23 - i)) | int(row, 2) for i, row in enumerate(GOLAY_B)]
    words = [0]
    for g in gens:
        words += [w ^ g for w in words]
    return sorted(words)


def golay_selfcheck(code: BinaryCode) -> dict:
    """Enumeration-based verification of the extended Golay code."""
    ws = set(code.words)
    weights = dict(sorted(Counter(w.bit_count() for w in code.words).items()))
    gens = [(1 << (23 - i)) | int(row, 2) for i, row in enumerate(GOLAY_B)]
    closed = all((a ^ b) in ws for a in gens for b in gens)
    closed = closed and all((g ^ w) in ws for g in gens for w in code.words[::97])
    min_dist = min(w.bit_count() for w in code.words if w)
    strength = design_strength(code, moments(code))
    checks = {
        "size": len(code) == 4096 and len(ws) == 4096,
        "linear": closed,
        "min_distance": min_dist == 8,
        "weight_distribution": weights == GOLAY_WEIGHTS,
        "antipodal": is_antipodal(code),
        "strength": strength == 7,
    }
    return {
        "checks": checks,
        "weights": weights,
        "min_distance": min_dist,
        "strength": strength,
        "ok": all(checks.values()),
    }


def golay24(verify: bool = True) -> BinaryCode:
    """The 4096 codewords of the extended binary Golay code, sorted."""
    code = BinaryCode(24, tuple(_golay_words()))
    if verify:
        report = golay_selfcheck(code)
        if not report["ok"]:
            bad = [k for k, v in report["checks"].items() if not v]
            raise ConstructionError(f"Golay self-check failed: {bad}")
    return code


def construct_tight_kk(family: str, n: int | None = None, hadamard: HadamardMatrix | None = None):
    """Build a tight (k,k)-design and its certificate.

    `family` is ``"even_weight"`` (needs even `n`, gives k = n/2 - 1),
    ``"hadamard"`` (order `n` or an explicit `hadamard`, gives k = 1) or
    ``"golay"`` (n = 24, k = 3). Returns ``(code, k, certificate)``.
    """
    from .bounds import tightness_certificate

    if family == "even_weight":
        if n is None:
            raise ValueError("even_weight needs n")
        if n < 4:
            raise ValueError("even_weight tight designs need n >= 4")
        code = antipodal_halve(even_weight_code(n))
        k = n // 2 - 1
    elif family == "hadamard":
        h = hadamard if hadamard is not None else hadamard_of_order(n)
        code = hadamard_to_tight11(h)
        k = 1
    elif family == "golay":
        code = antipodal_halve(golay24())
        k = 3
    else:
        raise ValueError(f"unknown family {family!r}")
    return code, k, tightness_certificate(code, k)


def hadamard_of_order(n: int | None) -> HadamardMatrix:
    """A Hadamard matrix from the built-in constructions (Sylvester or Paley I)."""
    if n is None or n < 1:
        raise ValueError("hadamard needs a positive order")
    if n & (n - 1) == 0:
        return sylvester_hadamard(n.bit_length() - 1)
    if _is_prime(n - 1) and (n - 1) % 4 == 3:
        return paley_hadamard(n - 1)
    raise ValueError(f"no built-in Hadamard construction of order {n}")
