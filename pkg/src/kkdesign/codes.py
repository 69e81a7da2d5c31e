"""Binary codes, moments and design checks.

Words are packed into Python ints with coordinate 1 as the most significant
bit, so integer order is lexicographic order on words and Hamming distance is
a popcount. A `BinaryCode` is a multiset: duplicates are kept and counted.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .algebra import _krawtchouk_table, poly_eval

__all__ = [
    "CodeFormatError",
    "BinaryCode",
    "DistanceDistribution",
    "MomentVector",
    "DivisibilityReport",
    "hamming_distance",
    "inner_product",
    "distance_distribution",
    "moments",
    "moments_bruteforce",
    "is_t_design",
    "design_strength",
    "combinatorial_strength",
    "kk_level",
    "is_antipodal",
    "has_antipodal_pair",
    "antipodal_double",
    "antipodal_halve",
    "divisibility_check",
    "read_code",
    "write_code",
    "parse_code",
    "format_code",
]


class CodeFormatError(ValueError):
    """Malformed code file."""


def _word_from(w, n: int | None = None) -> int:
    if isinstance(w, str):
        if w.strip("01"):
            raise ValueError(f"word {w!r} is not binary")
        if n is not None and len(w) != n:
            raise ValueError(f"word {w!r} has length {len(w)}, expected {n}")
        return int(w, 2) if w else 0
    if isinstance(w, (int, np.integer)):
        w = int(w)
        if w < 0 or (n is not None and w >> n):
            raise ValueError(f"word {w} does not fit in {n} bits")
        return w
    bits = list(w)
    if n is not None and len(bits) != n:
        raise ValueError(f"word has length {len(bits)}, expected {n}")
    out = 0
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"coordinate {b!r} not in {{0,1}}")
        out = (out << 1) | b
    return out


@dataclass(frozen=True)
class BinaryCode:
    """Ordered multiset of length-`n` binary words (packed ints)."""

    n: int
    words: tuple[int, ...]

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ValueError("n must be a positive integer")
        if not self.words:
            raise ValueError("a code has at least one word")
        ws = tuple(_word_from(w, self.n) for w in self.words)
        object.__setattr__(self, "words", ws)

    @classmethod
    def from_strings(cls, words: Iterable[str]) -> "BinaryCode":
        ws = list(words)
        if not ws:
            raise ValueError("a code has at least one word")
        return cls(len(ws[0]), tuple(ws))

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    @property
    def mask(self) -> int:
        return (1 << self.n) - 1

    def word_str(self, w: int) -> str:
        return format(w, f"0{self.n}b")

    def strings(self) -> list[str]:
        return [self.word_str(w) for w in self.words]

    def sorted(self) -> "BinaryCode":
        return BinaryCode(self.n, tuple(sorted(self.words)))

    def complement(self, w: int) -> int:
        return w ^ self.mask

    def has_duplicates(self) -> bool:
        return len(set(self.words)) != len(self.words)

    def to_matrix(self) -> np.ndarray:
        """Rows of 0/1 entries, coordinate 1 first."""
        shifts = np.arange(self.n - 1, -1, -1, dtype=np.uint64)
        arr = np.array(self.words, dtype=np.uint64)[:, None]
        return ((arr >> shifts) & 1).astype(np.int8)


@dataclass(frozen=True)
class DistanceDistribution:
    """``counts[d]`` = number of ordered pairs of list entries at distance d."""

    n: int
    counts: tuple[int, ...]

    @property
    def size(self) -> int:
        return sum(self.counts)


@dataclass(frozen=True)
class MomentVector:
    """``values[i-1]`` holds ``M_i`` for ``i = 1..n``."""

    n: int
    values: tuple[Fraction, ...]

    def __getitem__(self, i: int) -> Fraction:
        if not 1 <= i <= self.n:
            raise IndexError(f"moment index {i} outside 1..{self.n}")
        return self.values[i - 1]

    def as_dict(self) -> dict[int, Fraction]:
        return {i + 1: v for i, v in enumerate(self.values)}


def hamming_distance(x, y) -> int:
    if isinstance(x, int) and isinstance(y, int):
        return (x ^ y).bit_count()
    x, y = list(x), list(y)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return sum(a != b for a, b in zip(x, y))


def inner_product(x, y, n: int | None = None) -> Fraction:
    """``1 - 2 d(x, y) / n``. Packed-int words need an explicit `n`."""
    if n is None:
        if isinstance(x, int) or isinstance(y, int):
            raise ValueError("n is required for packed words")
        n = len(x)
    return 1 - Fraction(2 * hamming_distance(x, y), n)


# popcount over uint64 arrays; words never exceed 64 bits here
def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a)


def distance_distribution(code: BinaryCode) -> DistanceDistribution:
    n = code.n
    if n > 64:
        counts = Counter((x ^ y).bit_count() for x in code.words for y in code.words)
        return DistanceDistribution(n, tuple(counts.get(d, 0) for d in range(n + 1)))
    # collapse multiplicities first: pairs of distinct values weighted by mult products
    mult = Counter(code.words)
    vals = np.array(list(mult.keys()), dtype=np.uint64)
    wts = np.array(list(mult.values()), dtype=np.int64)
    total = np.zeros(n + 1, dtype=np.int64)
    for x, wx in zip(vals, wts):
        d = _popcount(vals ^ x)
        total += wx * np.bincount(d, weights=wts, minlength=n + 1).astype(np.int64)
    return DistanceDistribution(n, tuple(int(c) for c in total))


def moments(code: BinaryCode, dist: DistanceDistribution | None = None) -> MomentVector:
    """``M_i = sum_d B_d Q_i(1 - 2d/n)`` for ``i = 1..n``."""
    n = code.n
    dist = dist or distance_distribution(code)
    qs = _krawtchouk_table(n)
    ts = [1 - Fraction(2 * d, n) for d in range(n + 1)]
    vals = []
    for i in range(1, n + 1):
        vals.append(sum((b * poly_eval(qs[i], t) for b, t in zip(dist.counts, ts) if b), Fraction(0)))
    return MomentVector(n, tuple(vals))


def moments_bruteforce(code: BinaryCode) -> MomentVector:
    """Direct double sum over ordered pairs; independent of `distance_distribution`."""
    n = code.n
    qs = _krawtchouk_table(n)
    vals = []
    for i in range(1, n + 1):
        s = Fraction(0)
        for x in code.words:
            for y in code.words:
                s += poly_eval(qs[i], inner_product(x, y, n))
        vals.append(s)
    return MomentVector(n, tuple(vals))


def is_t_design(code: BinaryCode, T: Iterable[int], mv: MomentVector | None = None) -> bool:
    T = set(T)
    if not T:
        return True
    if not all(1 <= i <= code.n for i in T):
        raise ValueError(f"T must lie in 1..{code.n}")
    mv = mv or moments(code)
    return all(mv[i] == 0 for i in T)


def design_strength(code: BinaryCode, mv: MomentVector | None = None) -> int:
    """Largest m with ``M_1 = ... = M_m = 0``."""
    mv = mv or moments(code)
    m = 0
    while m < code.n and mv[m + 1] == 0:
        m += 1
    return m


def combinatorial_strength(code: BinaryCode) -> int:
    """Strength by counting m-tuples in every m-set of columns.

    Independent of the moment machinery; requires a duplicate-free code.
    """
    if code.has_duplicates():
        raise ValueError("combinatorial strength is only checked on duplicate-free codes")
    n, size = code.n, len(code)
    rows = code.to_matrix()
    m = 0
    for cand in range(1, n + 1):
        if size % (2**cand):
            break
        lam = size // 2**cand
        ok = True
        for cols in combinations(range(n), cand):
            sub = rows[:, cols]
            keys = sub.astype(np.int64) @ (1 << np.arange(cand - 1, -1, -1))
            cnt = np.bincount(keys, minlength=2**cand)
            if not np.all(cnt == lam):
                ok = False
                break
        if not ok:
            break
        m = cand
    return m


def kk_level(code: BinaryCode, mv: MomentVector | None = None) -> int:
    """Largest ``k <= n // 2`` with ``M_2 = M_4 = ... = M_2k = 0``."""
    mv = mv or moments(code)
    k = 0
    while k < code.n // 2 and mv[2 * k + 2] == 0:
        k += 1
    return k


def is_antipodal(code: BinaryCode) -> bool:
    """Every word's complement is present, with the same multiplicity."""
    mult = Counter(code.words)
    return all(mult[code.complement(w)] == c for w, c in mult.items())


def has_antipodal_pair(code: BinaryCode) -> bool:
    present = set(code.words)
    return any(code.complement(w) in present for w in present)


def antipodal_double(code: BinaryCode) -> BinaryCode:
    """``C`` followed by ``-C``. Rejects codes that already contain an antipodal pair."""
    if has_antipodal_pair(code):
        raise ValueError("code contains an antipodal pair; doubling needs a pair-free code")
    return BinaryCode(code.n, code.words + tuple(code.complement(w) for w in code.words))


def antipodal_halve(code: BinaryCode) -> BinaryCode:
    """Keep the lexicographically smaller word of each antipodal pair, in input order."""
    if not is_antipodal(code):
        raise ValueError("code is not antipodal")
    kept = tuple(w for w in code.words if w < code.complement(w))
    return BinaryCode(code.n, kept)


@dataclass(frozen=True)
class DivisibilityReport:
    k: int
    size: int
    has_antipodal_pair: bool
    applicable: bool
    divisible: bool
    is_kk_design: bool
    contradicts: bool
    note: str = ""
    modulus: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "modulus", 4**self.k)


def divisibility_check(code: BinaryCode, k: int, mv: MomentVector | None = None) -> DivisibilityReport:
    """Check ``4**k | |C|`` for pair-free codes.

    The doubling argument needs ``2k + 1 <= n`` (otherwise the doubled code
    cannot have strength ``2k + 1``); outside that range the check is
    reported as not applicable. ``{00, 01}`` is the smallest example.
    """
    if k < 1:
        raise ValueError("k must be positive")
    mv = mv or moments(code)
    pair = has_antipodal_pair(code)
    size = len(code)
    divisible = size % 4**k == 0
    is_kk = 2 * k <= code.n and kk_level(code, mv) >= k
    if pair:
        applicable, note = False, "antipodal pair present"
    elif 2 * k + 1 > code.n:
        applicable, note = False, "2k+1 exceeds n"
    else:
        applicable, note = True, ""
    return DivisibilityReport(
        k=k,
        size=size,
        has_antipodal_pair=pair,
        applicable=applicable,
        divisible=divisible,
        is_kk_design=is_kk,
        contradicts=applicable and is_kk and not divisible,
        note=note,
    )


def parse_code(text: str) -> BinaryCode:
    n = None
    words: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise CodeFormatError(f"line {lineno}: expected 'n=<integer>', got {line!r}")
            try:
                n = int(line[2:])
            except ValueError:
                raise CodeFormatError(f"line {lineno}: bad length {line[2:]!r}") from None
            if n < 1:
                raise CodeFormatError(f"line {lineno}: n must be positive")
            continue
        if len(line) != n or line.strip("01"):
            raise CodeFormatError(f"line {lineno}: expected {n} characters from {{0,1}}, got {line!r}")
        words.append(line)
    if n is None:
        raise CodeFormatError("missing 'n=' header")
    if not words:
        raise CodeFormatError("code has no words")
    return BinaryCode(n, tuple(words))


def format_code(code: BinaryCode, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n={code.n}")
    lines.extend(code.strings())
    return "\n".join(lines) + "\n"


def read_code(path) -> BinaryCode:
    with open(path, encoding="utf-8") as fh:
        return parse_code(fh.read())


def write_code(code: BinaryCode, path, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_code(code, comments))
