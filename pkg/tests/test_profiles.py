import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chebotarev.profiles import (
    DegreeProfile, builtin_profiles, delta0, large_degree_profile, leastprime_profiles, profile,
    profiles_to_csv,
)


def test_builtin_rows():
    rows = {p.n0: p for p in builtin_profiles()}
    assert rows[2].d0 == 400000
    assert rows[8].d0 == 1257728
    assert rows[13].d0 == pytest.approx(7.56e11, rel=1e-15)
    assert rows[21].d0 == 1e21 and rows[21].label == "21+"
    assert sorted(rows) == list(range(2, 22))


def test_leastprime_rows_differ_only_at_small_degree():
    a = {p.n0: p.d0 for p in builtin_profiles()}
    b = {p.n0: p.d0 for p in leastprime_profiles()}
    assert {n for n in a if a[n] != b[n]} == set(range(2, 9))


def test_derived_quantities():
    p = profile(9, "2.29e7")
    assert p.L0 == pytest.approx(math.log(2.29e7), rel=1e-15)
    assert p.Q0 == pytest.approx(9 / math.log(2.29e7), rel=1e-15)
    assert builtin_profiles()[-1].Q0 == pytest.approx(1 / math.log(10))


def test_minkowski_constraint():
    for p in builtin_profiles() + leastprime_profiles():
        assert p.n0 <= 2 * p.L0 / math.log(3)
    with pytest.raises(ValueError):
        profile(5, 10)


def test_invalid_profiles():
    with pytest.raises(ValueError):
        profile(1, 100)
    with pytest.raises(ValueError):
        profile(2, 2)


def test_delta0_examples():
    p21 = builtin_profiles()[-1]
    assert delta0(0, p21) == pytest.approx(p21.Q0 * math.log(2))
    assert delta0(1, p21) == pytest.approx(0.477121, abs=1e-6)
    assert delta0(1, profile(9, "2.29e7")) == pytest.approx(0.58344936, rel=1e-7)


@given(st.floats(min_value=0, max_value=1e6), st.floats(min_value=1e-6, max_value=10))
def test_delta0_increasing(t, dt):
    p = profile(9, "2.29e7")
    assert delta0(t + dt, p) > delta0(t, p)


def test_delta0_increasing_in_q0():
    assert delta0(1, profile(9, "1e8")) < delta0(1, profile(9, "2.29e7"))


def test_large_degree_profile():
    p = large_degree_profile(30)
    assert p.d0 == 1e30 and p.Q0 == pytest.approx(1 / math.log(10))
    with pytest.raises(ValueError):
        large_degree_profile(20)


def test_csv_export():
    text = profiles_to_csv(builtin_profiles())
    lines = text.strip().splitlines()
    assert lines[0] == "n0,d0,L0,Q0"
    assert len(lines) == 21
    assert lines[1].startswith("2,400000,")
