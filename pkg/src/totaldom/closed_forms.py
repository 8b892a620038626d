"""D_t(G, x) for graph families with a known closed form.

These never enumerate (except for the corona-with-H forms, which need
D_t(H)), so they reach orders far beyond the enumeration cap.
"""

from __future__ import annotations

from .errors import InputError
from .graph import Graph
from .polynomial import Polynomial, binomial_shift

X = Polynomial.X


def _at_least(name: str, value: int, least: int) -> None:
    if value < least:
        raise InputError(f"{name} requires n >= {least}, got {value}")


def dt_complete(n: int) -> Polynomial:
    """(x+1)^n - n x - 1."""
    _at_least("dt_complete", n, 2)
    return binomial_shift(n) - Polynomial([1, n])


def dt_friendship(n: int) -> Polynomial:
    """x (x+1)^{2n} + x^{2n} - x."""
    _at_least("dt_friendship", n, 2)
    return binomial_shift(2 * n).shift_degree(1) + Polynomial.monomial(2 * n) - X


def dt_book_published(n: int) -> Polynomial:
    """x^2 (x+1)^{2n} + 2 x^{n+1} (x+1)^n + (2n+1) x^{2n}, as printed.

    Overcounts the x^{2n} coefficient by 2n: removing one spine vertex
    together with the far vertex of its page, or both vertices of a page,
    leaves a vertex with no neighbour in the set.  Kept for comparison;
    use :func:`dt_book` for the polynomial of the graph.
    """
    _at_least("dt_book_published", n, 2)
    return (binomial_shift(2 * n).shift_degree(2)
            + 2 * binomial_shift(n).shift_degree(n + 1)
            + Polynomial.monomial(2 * n, 2 * n + 1))


def dt_book(n: int) -> Polynomial:
    """x^2 (x+1)^{2n} + 2 x^{n+1} (x+1)^n + x^{2n} = (x (x+1)^n + x^n)^2.

    Certified against enumeration of :func:`totaldom.graph.book`.
    """
    _at_least("dt_book", n, 2)
    root = binomial_shift(n).shift_degree(1) + Polynomial.monomial(n)
    return root * root


def dt_complete_bipartite(m: int, n: int) -> Polynomial:
    """(x+1)^{m+n} - (x+1)^m - (x+1)^n + 1 = ((x+1)^m - 1)((x+1)^n - 1)."""
    if m < 1 or n < 1:
        raise InputError("dt_complete_bipartite requires m, n >= 1")
    return binomial_shift(m + n) - binomial_shift(m) - binomial_shift(n) + 1


def dt_corona_empty(n_g: int, m: int) -> Polynomial:
    """x^{n_g} (x+1)^{m n_g}: G o (m isolated vertices), for G of order n_g
    without isolated vertices.  Only the order of G enters."""
    _at_least("dt_corona_empty", n_g, 2)
    if m < 1:
        raise InputError("dt_corona_empty requires m >= 1")
    return binomial_shift(m * n_g).shift_degree(n_g)


def dt_k1_corona(h: Graph, *, cap: int | None = None) -> Polynomial:
    """D_t(K_1 o H) = x (1+x)^{|H|} - x + D_t(H)."""
    from .enumeration import total_domination_polynomial

    if h.n == 0:
        raise InputError("H must be nonempty")
    return binomial_shift(h.n).shift_degree(1) - X + total_domination_polynomial(h, cap=cap)


def dt_empty_corona(h: Graph, m: int, *, cap: int | None = None) -> Polynomial:
    """D_t((m isolated vertices) o H) = D_t(K_1 o H)^m."""
    if m < 1:
        raise InputError("dt_empty_corona requires m >= 1")
    return dt_k1_corona(h, cap=cap) ** m
