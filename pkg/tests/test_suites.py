import random

import pytest

from svbraid.suites import (SUITE_NAMES, random_gauss, random_word, run_suite)


def test_every_suite_passes_at_small_scale():
    for name in SUITE_NAMES:
        report = run_suite(name, 3, seed=1)
        assert report.passed, (name, report.counts())
        assert report.suite == name
        good, bad = report.counts()
        assert bad == 0 and good == len(report.checks)


def test_unknown_suite_name():
    with pytest.raises(ValueError):
        run_suite("nonsense", 3)


def test_generators_are_seed_deterministic():
    a = random_word(random.Random(99), 4, 10)
    b = random_word(random.Random(99), 4, 10)
    assert a == b
    g = random_gauss(random.Random(99), 4, 6)
    h = random_gauss(random.Random(99), 4, 6)
    assert g == h
