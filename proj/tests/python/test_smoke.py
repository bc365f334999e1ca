import math
import os

import pytest

import mindist

FIXTURES = os.environ.get("MINDIST_FIXTURE_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data", "fixtures"))


def test_bounds():
    assert mindist.binary_entropy(0.5) == 1.0
    assert mindist.log2_binomial_sum(7, 2) == pytest.approx(math.log2(29))
    assert mindist.hamming_finite(7, 3) == pytest.approx(4 / 7)
    assert mindist.asymptotic_bound("mrrw", 0.5) == 0.0
    with pytest.raises(ValueError):
        mindist.binary_entropy(1.5)
    with pytest.raises(ValueError):
        mindist.asymptotic_bound("plotkin", 0.7)


def test_params_and_maps():
    p = mindist.solve_params(256)
    assert p.xi == 4.0
    assert abs(p.a - 3.11) <= 0.01 and abs(p.b + 3.53) <= 0.01 and abs(p.c - 1.01) <= 0.01
    assert p(p.delta1) == 1.0
    assert abs(mindist.dmin(256, 64) - 74.4) <= 0.5
    assert mindist.rate_from_dmin(7, 7) == pytest.approx(1 / 7)
    assert mindist.delta_from_rate(7, 3 / 7) == pytest.approx(4 / 7)
    assert mindist.asymptotic_delta_from_rate(0.25) == 0.25
    assert mindist.asymptotic_delta_from_rate(0.25, as_printed=True) == 0.75
    with pytest.raises(mindist.DomainError):
        mindist.dmin(7, 0)


def test_codetable():
    entries = mindist.parse_table("# c\n7,4,3\n256,64,65,90\n")
    assert len(entries) == 2
    assert entries[0].is_exact and not entries[1].is_exact
    assert mindist.approximation_error(entries[1]) is None
    report = mindist.validate(entries)
    assert report.entries_evaluated == 1
    assert report.histogram == {-1: 1}
    assert "frac_within_1=1.000" in str(report)
    with pytest.raises(mindist.ParseError):
        mindist.parse_table("7,x,3\n")
    assert mindist.brute_force_min_distance(["1101000", "0110100", "0011010", "0001101"]) == 3


def test_snapshot():
    entries = mindist.parse_table_file(os.path.join(FIXTURES, "snapshot.csv"))
    for e in entries:
        path = os.path.join(FIXTURES, "generators", f"{e.n}_{e.k}.gen")
        assert mindist.generator_min_distance_file(path) == e.d_lower
    assert mindist.validate(entries).frac_within_2 == 1.0


def test_curve():
    rows = mindist.curve_csv("asymptotic", series=["gv", "mrrw", "quadratic"], samples=5).splitlines()
    assert rows[0] == "delta,gv,mrrw,quadratic"
    assert rows[3] == "0.5,0,0,0"
