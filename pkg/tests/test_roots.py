import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from totaldom import closed_forms as cf
from totaldom import graph as gr
from totaldom.errors import InputError, ResourceError
from totaldom.polynomial import Polynomial
from totaldom.roots import (
    RootSet,
    check_disc_bound,
    count_nonzero_real_roots,
    count_real_roots,
    disc_bound_radius,
    find_roots,
    fmt_float,
    integer_roots,
    poly_gcd,
    reconstruct,
    squarefree_decomposition,
    sturm_sequence,
)

X = Polynomial.X


def from_roots(*roots):
    p = Polynomial([1])
    for r in roots:
        p = p * (X - r)
    return p


def test_complete_bipartite_two_three():
    rs = find_roots(cf.dt_complete_bipartite(2, 3))
    assert rs.zero_multiplicity == 2
    expected = [-2, complex(-1.5, math.sqrt(3) / 2), complex(-1.5, -math.sqrt(3) / 2)]
    got = rs.values()
    assert len(got) == 3
    for z in expected:
        assert min(abs(z - w) for w in got) < 1e-12


def test_multiplicities_come_out_exactly():
    p = from_roots(-2, -2, -2, 1, 1) * (X ** 2 + 1) ** 2 * X ** 3
    rs = find_roots(p)
    assert rs.zero_multiplicity == 3
    mults = sorted((round(r.value.real, 6), round(r.value.imag, 6), r.multiplicity) for r in rs.roots)
    assert mults == [(-2.0, 0.0, 3), (0.0, -1.0, 2), (0.0, 1.0, 2), (1.0, 0.0, 2)]
    assert rs.converged and rs.degree == p.degree


def test_find_roots_rejects_degenerate_input():
    with pytest.raises(InputError):
        find_roots(Polynomial([]))
    with pytest.raises(InputError):
        find_roots(Polynomial([5]))
    with pytest.raises(ResourceError):
        find_roots(Polynomial([10 ** 301, 1]))


@pytest.mark.parametrize("make", [
    lambda: cf.dt_complete(15),
    lambda: cf.dt_friendship(20),
    lambda: cf.dt_book(12),
    lambda: cf.dt_complete_bipartite(15, 20),
    lambda: cf.dt_corona_empty(4, 3),
])
def test_reconstruction(make):
    p = make()
    rs = find_roots(p)
    assert rs.converged
    coeffs = reconstruct(rs)
    exact = np.array([float(c) for c in p.coeffs])
    scale = np.abs(exact).max()
    assert np.abs(coeffs - exact).max() / scale <= 1e-6


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=8))
def test_integer_roots_recovered(zs):
    p = from_roots(*zs)
    rs = find_roots(p)
    assert rs.converged
    assert rs.degree == len(zs)
    got = sorted(round(z.real) for z in [0j] * rs.zero_multiplicity + rs.values())
    assert got == sorted(zs)
    assert all(abs(z.imag) < 1e-6 for z in rs.values())


def test_root_set_json_round_trip():
    rs = find_roots(cf.dt_friendship(4))
    again = RootSet.from_json(rs.to_json())
    assert again.zero_multiplicity == rs.zero_multiplicity
    assert [r.value for r in again.roots] == [r.value for r in rs.roots]


def test_fmt_float_round_trips():
    for x in [0.1, -1.5, 1e-300, math.pi, -0.0]:
        assert float(fmt_float(x)) == x
    assert fmt_float(-0.0) == "0"


def test_squarefree_decomposition():
    p = X ** 2 * from_roots(1, 1, 1, -2) * (X ** 2 + 1) ** 2
    parts = {m: Polynomial(c) for c, m in squarefree_decomposition(p)}
    assert parts[1] == from_roots(-2)
    assert parts[2] in (X * (X ** 2 + 1), -(X * (X ** 2 + 1)))
    assert parts[3] in (X - 1, 1 - X)


def test_gcd():
    a = list(from_roots(1, 2, 3).coeffs)
    b = list(from_roots(2, 3, 5).coeffs)
    g = Polynomial(poly_gcd(a, b))
    assert g in (from_roots(2, 3), -from_roots(2, 3))


def test_sturm_counts():
    p = from_roots(-3, -1, 2) * (X ** 2 + 1)
    assert count_real_roots(p) == 3
    assert count_real_roots(p, (-4, 0)) == 2
    assert count_real_roots(p, (Fraction(-1, 2), Fraction(5, 2))) == 1
    # repeated roots are counted once
    assert count_real_roots(from_roots(1, 1, 1, -1)) == 2
    with pytest.raises(InputError):
        count_real_roots(p, (-1, 0))
    with pytest.raises(InputError):
        count_real_roots(p, (1, 1))


def test_sturm_sequence_ends_in_gcd():
    p = from_roots(2, 2, -1)
    seq = sturm_sequence(list(p.coeffs))
    last = Polynomial(seq[-1])
    assert last.degree == 1 and last(2) == 0


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(-6, 6), max_size=6), st.integers(0, 3))
def test_sturm_counts_distinct_integer_roots(zs, complex_pairs):
    p = from_roots(*zs) * (X ** 2 + X + 1) ** complex_pairs
    assert count_real_roots(p) == len(set(zs))


def test_sturm_count_cross_checks_numeric_roots():
    for p in [cf.dt_book(4), cf.dt_friendship(9), cf.dt_complete(7)]:
        rs = find_roots(p)
        numeric = sum(1 for r in rs.roots if abs(r.value.imag) < 1e-7)
        assert count_nonzero_real_roots(p) == numeric


def test_complete_graph_real_roots_by_parity():
    assert count_nonzero_real_roots(cf.dt_complete(4)) == 0
    assert count_nonzero_real_roots(cf.dt_complete(5)) == 1


def test_integer_roots_examples():
    assert integer_roots(cf.dt_complete(4), 3) == [0]
    p = X ** 2 * from_roots(-3, -2, 7)
    assert integer_roots(p, 2) == [-3, -2, 0]
    assert integer_roots(p, 10) == [-3, -2, 0, 7]


def test_disc_radius():
    assert disc_bound_radius(gr.complete(4)) == pytest.approx(15 ** (1 / 3))
    assert disc_bound_radius(gr.complete(2)) == pytest.approx(3)
    with pytest.raises(InputError):
        disc_bound_radius(gr.empty_graph(3))


@pytest.mark.parametrize("g", [gr.cycle(4), gr.complete(5), gr.friendship(3), gr.book(3),
                               gr.corona(gr.path(3), gr.complete(2))])
def test_disc_bound_holds(g):
    report = check_disc_bound(g)
    assert report.status == "pass"
    assert report.metrics["max_abs_z_plus_1"] <= report.metrics["radius"] + 1e-6


def test_disc_bound_skips_isolated_vertices():
    assert check_disc_bound(gr.empty_graph(2)).status == "skipped"


def test_disc_bound_reports_a_violation():
    # a polynomial that is not D_t of the graph, to see the failure path
    fake = from_roots(-50)
    report = check_disc_bound(gr.complete(3), dt=fake)
    assert report.status == "fail"
    assert report.witness["roots_outside"]


def test_unit_circle_roots_of_bipartite_graphs():
    rs = find_roots(cf.dt_complete_bipartite(7, 11))
    assert all(abs(abs(r.value + 1) - 1) < 1e-8 for r in rs.roots)
    for k in (7, 11):
        for j in range(1, k):
            w = cmath.exp(2j * math.pi * j / k) - 1
            assert min(abs(w - r.value) for r in rs.roots) < 1e-8
