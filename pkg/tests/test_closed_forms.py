import pytest

from oracles import brute_counts, pascal, poly_add, poly_mul, trim
from totaldom import closed_forms as cf
from totaldom import graph as gr
from totaldom.enumeration import total_domination_polynomial
from totaldom.errors import InputError
from totaldom.polynomial import Polynomial


def brute(g):
    return Polynomial(brute_counts(g.n, g.edges()))


@pytest.mark.parametrize("n", range(2, 9))
def test_complete(n):
    assert cf.dt_complete(n) == brute(gr.complete(n))
    expected = pascal(n)
    expected[0] -= 1
    expected[1] -= n
    assert list(cf.dt_complete(n).coeffs) == trim(expected)


@pytest.mark.parametrize("n", range(2, 5))
def test_friendship(n):
    assert cf.dt_friendship(n) == brute(gr.friendship(n))


@pytest.mark.parametrize("n", range(2, 5))
def test_book(n):
    assert cf.dt_book(n) == brute(gr.book(n))


def test_book_square_form():
    # x(x+1)^n + x^n, squared, spelled out with plain lists
    for n in range(2, 8):
        inner = poly_add([0] + pascal(n), [0] * n + [1])
        assert list(cf.dt_book(n).coeffs) == trim(poly_mul(inner, inner))


@pytest.mark.parametrize("n", range(2, 8))
def test_printed_book_expression_overcounts_the_middle_term(n):
    diff = cf.dt_book_published(n) - cf.dt_book(n)
    assert diff == Polynomial.monomial(2 * n, 2 * n)


def test_printed_book_expression_is_wrong_at_two_pages():
    assert cf.dt_book_published(2)[4] == 15
    assert total_domination_polynomial(gr.book(2))[4] == 11


@pytest.mark.parametrize("m, n", [(1, 1), (1, 4), (2, 2), (2, 3), (3, 4), (4, 4)])
def test_complete_bipartite(m, n):
    assert cf.dt_complete_bipartite(m, n) == brute(gr.complete_bipartite(m, n))


@pytest.mark.parametrize("base", [gr.cycle(3), gr.path(3), gr.complete(3)])
def test_corona_with_empty_copies(base):
    g = gr.corona(base, gr.empty_graph(2))
    assert cf.dt_corona_empty(3, 2) == total_domination_polynomial(g)
    assert cf.dt_corona_empty(3, 2) == Polynomial.monomial(3) * (Polynomial.X + 1) ** 6


def test_corona_formula_needs_base_without_isolated_vertices():
    g = gr.corona(gr.empty_graph(2), gr.empty_graph(1))
    assert total_domination_polynomial(g) == Polynomial.monomial(4)
    assert cf.dt_corona_empty(2, 1) != total_domination_polynomial(g)


def test_k1_corona():
    for h in [gr.complete(1), gr.path(3), gr.cycle(4), gr.empty_graph(3)]:
        g = gr.corona(gr.complete(1), h)
        assert cf.dt_k1_corona(h) == brute(g)


def test_empty_corona():
    assert cf.dt_empty_corona(gr.complete(1), 2) == Polynomial.monomial(4)
    two_p2 = gr.disjoint_union(gr.path(2), gr.path(2))
    assert cf.dt_empty_corona(gr.complete(1), 2) == total_domination_polynomial(two_p2)
    for h in [gr.path(2), gr.star(2)]:
        assert cf.dt_empty_corona(h, 2) == brute(gr.corona(gr.empty_graph(2), h))


def test_argument_checks():
    with pytest.raises(InputError):
        cf.dt_complete(1)
    with pytest.raises(InputError):
        cf.dt_friendship(1)
    with pytest.raises(InputError):
        cf.dt_complete_bipartite(0, 3)
    with pytest.raises(InputError):
        cf.dt_corona_empty(1, 2)
