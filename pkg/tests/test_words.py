import random

import pytest

from svbraid import (
    BraidWord, Budget, Distinct, Equivalent, IndexRangeError, Kind, ParseError,
    TraceStep, Unknown, compose_perms, concat, degree, equivalent, free_reduce,
    free_reduce_trace, identity_perm, inverse_word, invert_perm, invert_step,
    parse_word, print_word, relation_catalog, replay_trace, rewrite_neighbors,
    rho, sigma, singularity_count, tau, theta, virtual_word_of_perm,
)
from svbraid.suites import random_word


def test_parse_print_roundtrip():
    for text in ("e", "s1", "s1'", "r2", "t1", "r1 s2' t1 r2 s2 t2"):
        w = parse_word(text, 3)
        assert print_word(w) == text
        assert parse_word(print_word(w), 3) == w


def test_parse_empty_spellings():
    assert parse_word("e", 2) == BraidWord(2)
    assert print_word(BraidWord(3)) == "e"
    with pytest.raises(ParseError):
        parse_word("", 2)
    with pytest.raises(ParseError):
        parse_word("e e", 2)


def test_parse_errors():
    with pytest.raises(ParseError) as exc:
        parse_word("s1 x3", 4)
    assert exc.value.position == 4  # column of the bad token
    with pytest.raises(IndexRangeError):
        parse_word("s5", 2)
    with pytest.raises(IndexRangeError):
        parse_word("r0", 3)
    with pytest.raises(ValueError):
        parse_word("e", 1)
    with pytest.raises(ParseError):
        parse_word("t1'", 3)


def test_word_container_basics():
    w = parse_word("s1 t2", 3)
    assert len(w) == 2
    assert w.letters == (sigma(1), tau(2))
    assert BraidWord(1) == BraidWord(1, ())
    with pytest.raises(ValueError):
        BraidWord(0)
    with pytest.raises(ValueError):
        BraidWord(2, (sigma(5),))


def test_concat_and_inverse():
    u = parse_word("s1 r2", 3)
    v = parse_word("s2'", 3)
    assert print_word(concat(u, v)) == "s1 r2 s2'"
    assert print_word(inverse_word(u)) == "r2 s1'"
    assert free_reduce(concat(u, inverse_word(u))) == BraidWord(3)
    with pytest.raises(ValueError):
        inverse_word(parse_word("t1", 2))
    with pytest.raises(ValueError):
        concat(parse_word("s1", 2), parse_word("s1", 3))


def test_perm_helpers():
    p = (3, 1, 2)
    assert compose_perms(p, invert_perm(p)) == identity_perm(3)
    assert invert_perm(p) == (2, 3, 1)
    q = (2, 1, 3)
    # left to right: apply q after p
    assert compose_perms(p, q) == (3, 2, 1)


def test_theta_examples():
    assert theta(parse_word("s1 t2", 3)) == (3, 1, 2)
    assert theta(parse_word("t1 t2", 3)) == (3, 1, 2)
    assert theta(parse_word("r1 t2 r1", 3)) == (3, 2, 1)
    assert theta(BraidWord(4)) == (1, 2, 3, 4)


def test_theta_is_multiplicative():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(2, 5)
        u = random_word(rng, n, 8)
        v = random_word(rng, n, 8)
        assert theta(concat(u, v)) == compose_perms(theta(u), theta(v))


def test_virtual_word_of_perm_exhaustive_s4():
    import itertools
    for p in itertools.permutations(range(1, 5)):
        w = virtual_word_of_perm(p)
        assert theta(w) == p
        assert all(g.kind == Kind.VIRT for g in w.letters)


def test_degree_and_singularity_count():
    w = parse_word("s1 s2' t1 r2 t2", 3)
    assert degree(w) == 0
    assert singularity_count(w) == 2
    assert degree(parse_word("s1 s1", 2)) == 2
    assert degree(parse_word("s1'", 2)) == -1


def test_free_reduce():
    assert free_reduce(parse_word("s1 s1'", 2)) == BraidWord(2)
    assert free_reduce(parse_word("r1 r1", 2)) == BraidWord(2)
    assert print_word(free_reduce(parse_word("t1 t1", 2))) == "t1 t1"
    assert print_word(free_reduce(parse_word("s1 r1 r1 s1' t1", 2))) == "t1"


def test_free_reduce_trace_replays():
    rng = random.Random(5)
    for _ in range(200):
        w = random_word(rng, rng.randint(2, 4), 10)
        reduced, trace = free_reduce_trace(w)
        assert replay_trace(w, trace) == reduced
        assert all(step.label in ("R2", "V3") for step in trace)


def test_trace_step_inversion():
    w = parse_word("t1 s1", 2)
    verdict = equivalent(w, parse_word("s1 t1", 2))
    assert isinstance(verdict, Equivalent)
    step = verdict.trace[0]
    assert replay_trace(replay_trace(w, [step]), [invert_step(step)]) == w


def test_replay_rejects_stale_trace():
    w = parse_word("t1 s1", 2)
    bad = TraceStep("S3", 0, (sigma(1), tau(1)), (tau(1), sigma(1)))
    with pytest.raises(ValueError):
        replay_trace(w, [bad])


def test_relation_catalog_counts():
    assert len(relation_catalog(2)) == 4
    assert len(relation_catalog(3)) == 13
    assert len(relation_catalog(4)) == 31


def test_relation_catalog_families_at_n4():
    from collections import Counter
    got = Counter(inst.family for inst in relation_catalog(4))
    assert got == {"R0": 1, "R2": 6, "R3": 2, "V1": 1, "V2": 2, "V3": 3,
                   "V4": 2, "V5": 2, "S1": 1, "S2": 2, "S3": 3, "S4": 2,
                   "SV1": 2, "SV2": 2}


def test_relation_sides_share_invariants():
    for n in (2, 3, 4):
        for inst in relation_catalog(n):
            assert theta(inst.lhs) == theta(inst.rhs), inst.family
            assert degree(inst.lhs) == degree(inst.rhs), inst.family
            assert singularity_count(inst.lhs) == singularity_count(inst.rhs)


def test_rewrite_neighbors_contains_relation_rewrites():
    w = parse_word("t1 s1", 2)
    results = {(step.label, print_word(out)) for step, out in rewrite_neighbors(w, 4)}
    assert ("S3", "s1 t1") in results
    for step, out in rewrite_neighbors(w, 4):
        assert replay_trace(w, [step]) == out


def test_equivalent_trivial_and_one_move():
    assert isinstance(equivalent(parse_word("s1 s1'", 2), BraidWord(2)), Equivalent)
    v = equivalent(parse_word("t1 s1", 2), parse_word("s1 t1", 2))
    assert isinstance(v, Equivalent) and len(v.trace) == 1
    v = equivalent(parse_word("s1", 2), parse_word("s1", 2))
    assert isinstance(v, Equivalent) and v.trace == ()


def test_equivalent_distinct_by_invariants():
    v = equivalent(parse_word("s1", 2), parse_word("s1'", 2))
    assert isinstance(v, Distinct) and v.invariant == "degree"
    v = equivalent(parse_word("r1", 3), parse_word("r2", 3))
    assert isinstance(v, Distinct) and v.invariant == "theta"
    v = equivalent(parse_word("t1 t1", 2), parse_word("t1", 2))
    assert isinstance(v, Distinct)


def test_equivalent_respects_move_budget():
    u, v = parse_word("t1 s1", 2), parse_word("s1 t1", 2)
    verdict = equivalent(u, v, Budget(max_moves=0))
    assert isinstance(verdict, Unknown)


def test_equivalent_rejects_mixed_strand_counts():
    with pytest.raises(ValueError):
        equivalent(parse_word("s1", 2), parse_word("s1", 3))


def test_equivalent_traces_replay():
    rng = random.Random(3)
    for n in (2, 3):
        for inst in relation_catalog(n):
            v = equivalent(inst.lhs, inst.rhs)
            assert isinstance(v, Equivalent)
            assert replay_trace(inst.lhs, v.trace) == inst.rhs
    for _ in range(30):
        w = random_word(rng, 3, 6)
        spot = rng.randint(0, len(w)) if len(w) else 0
        padded = BraidWord(3, w.letters[:spot] + (sigma(1), sigma(1, -1)) + w.letters[spot:])
        v = equivalent(w, padded)
        assert isinstance(v, Equivalent)
        assert replay_trace(w, v.trace) == padded


def test_equivalent_unknown_reports_effort():
    u = parse_word("s1 t2", 3)
    v = parse_word("r1 s1 r1 t2", 3)
    verdict = equivalent(u, v, Budget(nodes=2000))
    assert isinstance(verdict, Unknown)
    assert verdict.nodes_explored > 0


def test_budget_validation():
    with pytest.raises(ValueError):
        Budget(nodes=0)
    with pytest.raises(ValueError):
        Budget(slack=-1)
    with pytest.raises(ValueError):
        Budget(max_len=0)
