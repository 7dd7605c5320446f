import math
import random

import pytest

from svbraid import (
    BraidWord, FormalSum, degree, degree_spectrum, eta, eta_hat,
    eta_hat_expansion, flatten, formal_sum_from_dicts, formal_sum_to_dicts,
    free_reduce, parse_word, print_word, scalar_preimage_check,
    singularity_count,
)
from svbraid.suites import random_word

OMEGA = "r1 s2' t1 r2 s2 t2"


def test_expansion_of_singularity_free_word_is_itself():
    w = parse_word("s1 r2 s2'", 3)
    fs = eta_hat(w)
    assert list(fs.terms()) == [(w, 1)]
    assert degree_spectrum(fs) == {0: 1}


def test_worked_expansion():
    fs = eta_hat(parse_word(OMEGA, 3))
    got = [(c, print_word(w)) for w, c in fs.terms()]
    assert got == [
        (1, "r1 s2' s1 r2 s2 s2"),
        (-1, "r1 s2' s1 r2 s2 s2'"),
        (-1, "r1 s2' s1' r2 s2 s2"),
        (1, "r1 s2' s1' r2 s2 s2'"),
    ]
    assert degree_spectrum(fs) == {-2: 1, 0: 2, 2: 1}


def test_expansion_order_varies_leftmost_singularity_slowest():
    signs = [sign for sign, _ in eta_hat_expansion(parse_word("t1 t1 t1", 2))]
    assert signs == [1, -1, -1, 1, -1, 1, 1, -1]


def test_repeated_singular_letters_do_not_merge():
    fs = eta_hat(parse_word("t1 t1", 2))
    assert len(fs) == 4
    assert degree_spectrum(fs) == {-2: 1, 0: 2, 2: 1}


def test_spectrum_is_binomial():
    rng = random.Random(13)
    for _ in range(200):
        w = random_word(rng, rng.randint(2, 5), 10)
        d = singularity_count(w)
        s = degree(w)
        spectrum = degree_spectrum(eta_hat(w))
        assert spectrum == {s + d - 2 * k: math.comb(d, k) for k in range(d + 1)}


def test_expansion_size_cap():
    w = BraidWord(2, parse_word("t1", 2).letters * 21)
    with pytest.raises(ValueError):
        eta_hat(w)
    small = BraidWord(2, parse_word("t1", 2).letters * 3)
    assert len(eta_hat(small, max_singularities=3)) == 8
    with pytest.raises(ValueError):
        eta_hat(small, max_singularities=2)


def test_eta_rejects_virtual_letters():
    with pytest.raises(ValueError) as exc:
        eta(parse_word("s1 r1 t1", 2))
    assert "virtual" in str(exc.value)
    fs = eta(parse_word("s1 t1", 2))
    assert len(fs) == 2


def test_flatten():
    assert print_word(flatten(parse_word("r1 t2 s1'", 3))) == "r1 s2 s1'"


def test_formal_sum_arithmetic():
    fs = FormalSum(2)
    w = parse_word("s1", 2)
    fs.add(w, 2)
    fs.add(w, -2)
    assert len(fs) == 0 and fs.coefficient(w) == 0
    fs.add(w, 3)
    assert fs.coefficient(w) == 3
    with pytest.raises(ValueError):
        fs.add(parse_word("s1", 3), 1)
    with pytest.raises(ValueError):
        fs.add(parse_word("t1", 2), 1)


def test_formal_sum_equality_ignores_order():
    a, b = FormalSum(2), FormalSum(2)
    u, v = parse_word("s1", 2), parse_word("r1", 2)
    a.add(u, 1)
    a.add(v, -1)
    b.add(v, -1)
    b.add(u, 1)
    assert a == b


def test_dict_roundtrip():
    fs = eta_hat(parse_word(OMEGA, 3))
    rows = formal_sum_to_dicts(fs)
    assert rows == sorted(rows, key=lambda r: r["word"])
    assert formal_sum_from_dicts(rows, 3) == fs


def test_scalar_preimage_examples():
    assert scalar_preimage_check(parse_word("e", 2))
    assert scalar_preimage_check(parse_word("s1 s1'", 2))
    assert scalar_preimage_check(parse_word("r1 r1", 2))
    assert not scalar_preimage_check(parse_word("r1", 2))
    assert not scalar_preimage_check(parse_word("t1", 2))
    assert not scalar_preimage_check(parse_word("s1 s1", 2))


def test_scalar_preimage_matches_reduction():
    rng = random.Random(17)
    for _ in range(300):
        w = random_word(rng, rng.randint(2, 4), 8)
        assert scalar_preimage_check(w) == (len(free_reduce(w)) == 0)
