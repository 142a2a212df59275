import math

import pytest

from hexcoloring.coloring import ColorScheme
from hexcoloring.evaluator import cubic_f, quartic_dsq, regular_dsq
from hexcoloring.geometry import (
    RECTILINEAR,
    REGULAR,
    SEMI_REGULAR,
    DomainError,
)
from hexcoloring.optimizer import SolveOptions, optimize_scheme, solve, solve_all


def test_k3_half_diameter():
    res = solve(3, REGULAR)
    assert abs(res.d - 0.5) <= 1e-9
    assert (tuple(res.triple.t1), tuple(res.triple.t2)) == ((2, -1), (1, 1))


def test_k4_regular_champion():
    all4 = solve_all(4)
    assert all4.champion_class == REGULAR
    assert abs(all4.champion.d - math.sqrt(3) / 2) <= 1e-9
    assert (all4.champion.scheme.g, all4.champion.scheme.h) == (2, 0)


def test_k7_regular_result():
    res = solve(7, REGULAR)
    assert abs(res.dsq - 1.75) <= 1e-9
    assert (tuple(res.triple.t1), tuple(res.triple.t2)) == ((3, -1), (1, 2))
    assert res.closed_form_tag == "loeschian"


def test_k8_semi_regular():
    res = solve(8, SEMI_REGULAR)
    assert res.dsq_rational == (49, 25)
    assert abs(res.d - 1.4) <= 1e-6
    assert abs(res.r - 0.2) <= 1e-4
    assert (res.scheme.g, res.scheme.h) == (4, 1)


def test_k15_semi_regular_rational():
    res = solve(15, SEMI_REGULAR)
    assert res.dsq_rational == (153, 32)
    assert abs(res.r - 0.375) <= 1e-4


def test_k22_rectilinear_rational():
    res = solve(22, RECTILINEAR)
    assert res.dsq_rational == (193496, 21275)
    assert abs(res.d - 3.015790796) <= 1e-6


def test_k6_rectilinear_matches_cubic():
    # regression guard: a sliver shape can hide the nearest same-color tile
    # outside any fixed enumeration window; the solver must not fall for it
    res = solve(6, RECTILINEAR)
    assert abs(res.dsq - cubic_f(6)[1]) <= 1e-7
    assert res.closed_form_tag == "cubic_f"
    assert (res.scheme.g, res.scheme.h) == (3, 0)
    assert res.d > 0.99


def test_k11_rectilinear_matches_quartic():
    res = solve(11, RECTILINEAR)
    assert abs(res.dsq - quartic_dsq(11)) <= 1e-7
    assert res.closed_form_tag == "quartic"


def test_loeschian_regular_agreement():
    for k in (4, 7, 9, 12, 13, 16, 19, 21, 25, 27, 28):
        res = solve(k, REGULAR)
        assert abs(res.dsq - float(regular_dsq(k))) <= 1e-7, k


def test_solve_is_deterministic():
    a = solve(17, RECTILINEAR)
    b = solve(17, RECTILINEAR)
    assert a.d == b.d
    assert a.gaps == b.gaps
    assert a.scheme == b.scheme


def test_class_nesting(champions):
    results, _ = champions
    for k in range(5, 16):
        per = results[k].per_class
        d_reg = per[REGULAR].d
        d_semi = per[SEMI_REGULAR].d
        d_rect = per[RECTILINEAR].d
        assert d_reg <= d_semi + 1e-9
        assert d_semi <= d_rect + 1e-9


def test_champion_class_matches_reference(champions):
    from hexcoloring.analysis import load_reference

    results, _ = champions
    by_k = {row.k: row for row in load_reference()}
    for k in range(3, 31):
        assert results[k].champion_class == by_k[k].class_of_best, k


def test_champion_is_max_over_classes(champions):
    # ties go to the simplest class, so allow the tie tolerance
    results, _ = champions
    for k in range(3, 31):
        per = results[k].per_class
        best = max(res.d for res in per.values())
        assert results[k].champion.d >= best - 1e-9


def test_triple_determinants(champions):
    results, _ = champions
    for k in range(3, 31):
        for res in results[k].per_class.values():
            t = res.triple
            assert t.t1.i * t.t2.j - t.t2.i * t.t1.j == k


def test_k77_non_canonical_triple():
    res = solve(77, SEMI_REGULAR)
    assert res.dsq_rational == (1215, 32)
    t = res.triple
    assert not t.canonical
    # the far pair of the triple exceeds the attained gap
    assert t.d01 > res.d + 1e-6
    assert min(t.d01, t.d02, t.d12) >= res.d - 1e-9


def test_optimize_scheme_regular():
    res = optimize_scheme(7, ColorScheme(7, 7, 4), REGULAR)
    assert abs(res.d - math.sqrt(7) / 2) <= 1e-12


def test_optimize_scheme_suboptimal_scheme():
    # a poor scheme still optimizes honestly, just to a smaller gap
    best = optimize_scheme(7, ColorScheme(7, 7, 4), RECTILINEAR)
    worse = optimize_scheme(7, ColorScheme(7, 7, 1), RECTILINEAR)
    assert worse.d < best.d


def test_optimize_scheme_rejects_mismatch():
    with pytest.raises(DomainError):
        optimize_scheme(8, ColorScheme(7, 7, 4))
    with pytest.raises(DomainError):
        optimize_scheme(7, ColorScheme(7, 7, 4), "octagonal")


def test_solve_rejects_bad_k():
    for k in (0, 1, 2, -5):
        with pytest.raises(DomainError):
            solve(k)
    with pytest.raises(DomainError):
        solve(7, "octagonal")


def test_solve_options_validation():
    with pytest.raises(DomainError):
        SolveOptions(starts_per_axis=0)
    with pytest.raises(DomainError):
        SolveOptions(coarse_grid=3)
    with pytest.raises(DomainError):
        SolveOptions(max_iters=0)
    with pytest.raises(DomainError):
        SolveOptions(enumeration_slack=-1)
    with pytest.raises(DomainError):
        SolveOptions(value_tol=0.0)
    with pytest.raises(DomainError):
        SolveOptions(param_tol=1.0)


def test_coarser_options_still_close():
    fast = solve(9, RECTILINEAR, SolveOptions(starts_per_axis=4, coarse_grid=24))
    full = solve(9, RECTILINEAR)
    assert abs(fast.d - full.d) <= 1e-6


def test_result_floats_are_builtin(champions):
    results, _ = champions
    res = results[10].champion
    for value in (res.d, res.dsq, res.r, res.s, *res.gaps):
        assert type(value) is float
