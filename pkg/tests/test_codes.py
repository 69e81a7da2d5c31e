from fractions import Fraction as F
from math import comb

import pytest

from conftest import random_code, random_linear_code
from kkdesign.codes import (
    BinaryCode,
    CodeFormatError,
    antipodal_double,
    antipodal_halve,
    combinatorial_strength,
    design_strength,
    distance_distribution,
    divisibility_check,
    format_code,
    hamming_distance,
    has_antipodal_pair,
    inner_product,
    is_antipodal,
    is_t_design,
    kk_level,
    moments,
    moments_bruteforce,
    parse_code,
    read_code,
    write_code,
)
from kkdesign.constructions import even_weight_code, golay24


def code(*words):
    return BinaryCode.from_strings(words)


def test_hamming_distance_examples():
    assert hamming_distance("0000", "0000") == 0
    assert hamming_distance("0101", "1010") == 4
    assert hamming_distance("110000", "101000") == 2
    assert hamming_distance(0b110000, 0b101000) == 2
    with pytest.raises(ValueError):
        hamming_distance("01", "011")


def test_inner_product_examples():
    assert inner_product("0110", "0110") == 1
    assert inner_product("0110", "1001") == -1
    assert inner_product("110000", "101000") == F(1, 3)
    assert inner_product(0b110000, 0b101000, 6) == F(1, 3)
    with pytest.raises(ValueError):
        inner_product(1, 2)
    with pytest.raises(ValueError):
        inner_product("01", "0")


def test_code_validation():
    with pytest.raises(ValueError):
        BinaryCode(3, ())
    with pytest.raises(ValueError):
        BinaryCode(3, ("0101",))
    with pytest.raises(ValueError):
        BinaryCode(2, (4,))
    assert BinaryCode(3, ([1, 0, 1],)).words == (5,)


def test_distance_distribution_examples():
    assert distance_distribution(code("0")).counts == (1, 0)
    assert distance_distribution(code("00", "11")).counts == (2, 0, 2)
    for n in range(1, 5):
        full = BinaryCode(n, tuple(range(1 << n)))
        assert distance_distribution(full).counts == tuple(2**n * comb(n, d) for d in range(n + 1))


def test_distance_distribution_counts_duplicates(rng):
    for _ in range(50):
        c = random_code(rng, rng.randint(1, 7), rng.randint(1, 20))
        counts = [0] * (c.n + 1)
        for x in c.words:
            for y in c.words:
                counts[bin(x ^ y).count("1")] += 1
        dd = distance_distribution(c)
        assert dd.counts == tuple(counts)
        assert dd.size == len(c) ** 2
        assert dd.counts[0] >= len(c)


def test_moments_examples():
    for n in range(1, 5):
        full = BinaryCode(n, tuple(range(1 << n)))
        assert moments(full).values == (0,) * n
        assert moments_bruteforce(full).values == (0,) * n
    assert moments(code("0110")).values == (1, 1, 1, 1)
    mv = moments(even_weight_code(6))
    assert all(mv[i] == 0 for i in range(1, 6))
    assert mv[6] > 0


def test_moments_match_bruteforce(rng):
    for _ in range(200):
        c = random_code(rng, rng.randint(1, 6), rng.randint(1, 8))
        assert moments(c) == moments_bruteforce(c)


def test_positive_definiteness(rng):
    for _ in range(1000):
        c = random_code(rng, rng.randint(1, 10), rng.randint(1, 32))
        assert all(v >= 0 for v in moments(c).values)


def test_scaled_moments_are_integers(rng):
    # C(n, i) M_i = sum_d B_d K_i(d) is an integer; M_i itself need not be
    seen_fraction = False
    for _ in range(100):
        c = random_code(rng, rng.randint(1, 9), rng.randint(1, 20))
        mv = moments(c)
        assert all((comb(c.n, i) * mv[i]).denominator == 1 for i in range(1, c.n + 1))
        seen_fraction |= any(v.denominator != 1 for v in mv.values)
    assert seen_fraction


def test_moment_vector_indexing():
    mv = moments(code("01"))
    with pytest.raises(IndexError):
        mv[0]
    with pytest.raises(IndexError):
        mv[3]
    assert mv.as_dict() == {1: mv[1], 2: mv[2]}


def test_is_t_design_examples():
    assert is_t_design(even_weight_code(6), {1, 2, 3, 4, 5})
    assert not is_t_design(code("000"), {1})
    assert is_t_design(code("000"), set())
    with pytest.raises(ValueError):
        is_t_design(code("000"), {4})


def test_design_strength_examples():
    assert design_strength(code("0101")) == 0
    for ell in range(1, 6):
        assert design_strength(even_weight_code(2 * ell)) == 2 * ell - 1
    assert design_strength(BinaryCode(3, tuple(range(8)))) == 3


def test_design_strength_golay():
    assert design_strength(golay24()) == 7


def test_kk_level_examples():
    assert kk_level(code("0101")) == 0
    half = antipodal_halve(even_weight_code(6))
    assert kk_level(half) >= 2
    assert kk_level(antipodal_halve(golay24(verify=False))) >= 3


def _oracle_corpus(rng, count):
    out = []
    while len(out) < count:
        n = rng.randint(1, 8)
        if len(out) % 2:
            c = random_linear_code(rng, n, rng.randint(0, n))
        else:
            c = random_code(rng, n, rng.randint(1, min(64, 1 << n)), duplicates=False)
        out.append(c)
    return out


def test_strength_oracle_equivalence(rng):
    corpus = _oracle_corpus(rng, 200)
    corpus += [even_weight_code(2 * ell) for ell in range(1, 5)]
    corpus += [antipodal_halve(even_weight_code(2 * ell)) for ell in range(1, 5)]
    strengths = []
    for c in corpus:
        s = design_strength(c)
        assert s == combinatorial_strength(c)
        strengths.append(s)
    assert max(strengths) >= 5  # the corpus is not all strength 0


def test_combinatorial_strength_rejects_duplicates():
    with pytest.raises(ValueError):
        combinatorial_strength(code("01", "01"))


def test_antipodal_examples():
    assert is_antipodal(code("00", "11"))
    assert not is_antipodal(code("00", "01"))
    assert is_antipodal(even_weight_code(6))
    assert not is_antipodal(code("00", "11", "00"))
    assert is_antipodal(code("00", "11", "00", "11"))
    assert has_antipodal_pair(code("00", "11", "00"))


def test_antipodal_double_examples():
    assert antipodal_double(code("0000")).strings() == ["0000", "1111"]
    half = antipodal_halve(even_weight_code(6))
    assert sorted(antipodal_double(half).words) == list(even_weight_code(6).words)
    with pytest.raises(ValueError):
        antipodal_double(code("00", "11"))


def test_antipodal_halve_examples():
    assert antipodal_halve(code("0000", "1111")).strings() == ["0000"]
    half = antipodal_halve(even_weight_code(6))
    assert len(half) == 16
    assert all(w.startswith("0") for w in half.strings())
    assert set(half.strings()) == {w for w in even_weight_code(6).strings() if w[0] == "0"}
    with pytest.raises(ValueError):
        antipodal_halve(code("00", "01"))


def test_halve_golay():
    half = antipodal_halve(golay24(verify=False))
    assert len(half) == 2048
    assert kk_level(half) >= 3
    assert not has_antipodal_pair(half)


def _antipodal_corpus(rng):
    out = [even_weight_code(2 * ell) for ell in range(1, 5)]
    # linear codes containing the all-ones word are antipodal
    for _ in range(40):
        n = rng.randint(2, 8)
        base = random_linear_code(rng, n, rng.randint(0, n - 1), translate=False)
        words = set(base.words) | {w ^ ((1 << n) - 1) for w in base.words}
        out.append(BinaryCode(n, tuple(sorted(words))))
    return out


def test_halving_and_doubling_roundtrip(rng):
    for d in _antipodal_corpus(rng):
        s = design_strength(d)
        k = min((s - 1) // 2, d.n // 2) if s >= 1 else 0
        half = antipodal_halve(d)
        assert len(half) * 2 == len(d)
        assert not has_antipodal_pair(half)
        assert kk_level(half) >= k
        if k:
            assert design_strength(antipodal_double(half)) >= 2 * k + 1
        assert sorted(antipodal_double(half).words) == sorted(d.words)


def test_halving_choice_does_not_matter(rng):
    for d in _antipodal_corpus(rng)[:12]:
        canonical = kk_level(antipodal_halve(d))
        pairs = sorted({min(w, w ^ d.mask) for w in d.words})
        for _ in range(100):
            pick = tuple(w if rng.random() < 0.5 else w ^ d.mask for w in pairs)
            assert kk_level(BinaryCode(d.n, pick)) == canonical


def test_even_moments_quarter(rng):
    # each pair (x, y) of the half contributes the four pairs (+-x, +-y) of D
    for d in _antipodal_corpus(rng):
        mh, md = moments(antipodal_halve(d)), moments(d)
        for i in range(2, d.n + 1, 2):
            assert mh[i] == md[i] / 4


def test_divisibility_examples():
    half = antipodal_halve(even_weight_code(6))
    rep = divisibility_check(half, 2)
    assert rep.applicable and rep.divisible and not rep.contradicts and rep.modulus == 16
    rep = divisibility_check(antipodal_halve(golay24(verify=False)), 3)
    assert rep.applicable and rep.divisible and rep.size == 2048
    rep = divisibility_check(code("00", "11"), 1)
    assert rep.has_antipodal_pair and not rep.applicable


def test_divisibility_needs_room_for_strength():
    # {00, 01} is a pair-free (1,1)-design of size 2; the doubling argument
    # would need strength 3 inside F_2^2, so the check does not apply
    c = code("00", "01")
    assert kk_level(c) == 1
    rep = divisibility_check(c, 1)
    assert rep.is_kk_design and not rep.divisible and not rep.applicable and not rep.contradicts


def test_divisibility_never_contradicted(rng):
    # any pair-free (k,k)-design with 2k+1 <= n must have size divisible by 4^k
    for c in [antipodal_halve(d) for d in _antipodal_corpus(rng)]:
        for k in range(1, c.n // 2 + 1):
            assert not divisibility_check(c, k).contradicts


def test_file_format_roundtrip(tmp_path):
    c = code("0101", "0101", "1110")
    p = tmp_path / "c.txt"
    write_code(c, p, ["hello"])
    text = p.read_text()
    assert text == "# hello\nn=4\n0101\n0101\n1110\n"
    assert read_code(p) == c
    assert parse_code("n=2\n# x\n01\n10") == code("01", "10")
    assert parse_code(format_code(c)) == c


@pytest.mark.parametrize(
    "text",
    ["", "01\n", "n=x\n01", "n=3\n01\n", "n=2\n0a\n", "n=2\n", "n=0\n"],
)
def test_file_format_errors(text):
    with pytest.raises(CodeFormatError):
        parse_code(text)
