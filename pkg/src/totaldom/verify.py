"""Theorem and conjecture checks, and campaigns that run them in bulk.

Every check returns a :class:`~totaldom.report.CheckReport`.  Theorem-level
failures make a campaign fail; conjecture-level failures are recorded as
counterexamples with enough data to reproduce them; ``info`` reports are
descriptive (asymptotic statements that have no fixed-n verdict).
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from . import closed_forms as cf
from . import graph as gr
from .enumeration import (
    count_total_dominating_sets,
    total_domination_polynomial,
    total_domination_polynomial_ie,
)
from .errors import InputError, ResourceError
from .graph import Graph, min_degree
from .polynomial import Polynomial, is_unimodal
from .report import CheckReport
from .roots import (
    check_disc_bound,
    count_nonzero_real_roots,
    count_real_roots,
    disc_bound_radius,
    find_roots,
    fmt_float,
    integer_roots,
)

IE_MAX_ORDER = 14
CIRCLE_TOL = 1e-8
MATCH_TOL = 1e-6
LEMMA_BOUND = 1e-6
CONJECTURED_INTEGER_ROOTS = frozenset({-3, -2, -1, 0})


def _coeffs(p: Polynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def _graph_witness(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


# ---------------------------------------------------------------------------
# random corpus


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    graph: Graph
    n: int
    p: float


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return gr.from_edge_list(n, edges)


def random_corpus(seed: int, orders: Iterable[int], probabilities: Iterable[float],
                  per_cell: int) -> list[CorpusEntry]:
    """Erdos-Renyi samples; each (n, p) cell has its own seeded stream so a
    cell's graphs do not depend on which other cells are requested."""
    out = []
    probabilities = list(probabilities)
    for n in orders:
        for p in probabilities:
            rng = random.Random(f"{seed}:{n}:{p}")
            for i in range(per_cell):
                g = gnp(n, p, rng)
                out.append(CorpusEntry(f"gnp(n={n},p={p},i={i},seed={seed})", g, n, p))
    return out


# ---------------------------------------------------------------------------
# graph checks


def check_ie_identity(g: Graph, name: str = "", *, max_order: int = IE_MAX_ORDER,
                      dt: Polynomial | None = None) -> CheckReport:
    instance = name or f"n={g.n}"
    if g.n > max_order:
        return CheckReport("ie_identity", instance, "skipped",
                           metrics={"reason": f"order {g.n} > {max_order}"})
    direct = dt if dt is not None else total_domination_polynomial(g)
    ie = total_domination_polynomial_ie(g)
    metrics = {"n": g.n, "total_sets": direct.eval_int(1) if direct.coeffs else 0}
    if direct == ie:
        return CheckReport("ie_identity", instance, "pass", metrics=metrics)
    witness = _graph_witness(g) | {"enumeration": _coeffs(direct), "inclusion_exclusion": _coeffs(ie)}
    return CheckReport("ie_identity", instance, "fail", witness=witness, metrics=metrics)


def check_monotone_counts(g: Graph, name: str = "", *, counts=None) -> CheckReport:
    """d_t(G, i) <= d_t(G, i+1) for 0 <= i < n/2."""
    instance = name or f"n={g.n}"
    try:
        table = counts if counts is not None else count_total_dominating_sets(g).counts
    except ResourceError as exc:
        return CheckReport("monotone_counts", instance, "skipped", metrics={"reason": str(exc)})
    bad = [i for i in range(len(table) - 1) if 2 * i < g.n and table[i] > table[i + 1]]
    if bad:
        witness = _graph_witness(g) | {"counts": [str(c) for c in table], "indices": bad}
        return CheckReport("monotone_counts", instance, "fail", witness=witness)
    return CheckReport("monotone_counts", instance, "pass", metrics={"n": g.n})


def check_unimodality(p: Polynomial, instance: str, *, level: str = "conjecture",
                      graph: Graph | None = None) -> CheckReport:
    if p.is_zero():
        return CheckReport("unimodality", instance, "skipped", level=level,
                           metrics={"reason": "zero polynomial"})
    ok, mode = is_unimodal(p)
    if ok:
        return CheckReport("unimodality", instance, "pass", level=level,
                           metrics={"mode": mode, "degree": p.degree})
    witness = {"coeffs": _coeffs(p)}
    if graph is not None:
        witness |= _graph_witness(graph)
    return CheckReport("unimodality", instance, "fail", level=level, witness=witness)


def check_integer_root_conjecture(g: Graph, name: str = "", *,
                                  dt: Polynomial | None = None) -> CheckReport:
    """Integer roots inside the disc lie in {-3, -2, -1, 0}.

    Theorem-level when delta >= 2n/3, conjecture-level otherwise.
    """
    instance = name or f"n={g.n}"
    delta = min_degree(g)
    if delta == 0:
        return CheckReport("integer_roots", instance, "skipped", level="conjecture",
                           metrics={"reason": "delta=0"})
    level = "theorem" if 3 * delta >= 2 * g.n else "conjecture"
    poly = dt if dt is not None else total_domination_polynomial(g)
    radius = disc_bound_radius(g)
    found = integer_roots(poly, radius)
    metrics = {"integer_roots": found, "radius": radius, "n": g.n, "min_degree": delta,
               "dense": level == "theorem"}
    stray = [z for z in found if z not in CONJECTURED_INTEGER_ROOTS]
    if stray:
        witness = _graph_witness(g) | {"coeffs": _coeffs(poly), "stray_roots": stray}
        return CheckReport("integer_roots", instance, "fail", level=level,
                           witness=witness, metrics=metrics)
    return CheckReport("integer_roots", instance, "pass", level=level, metrics=metrics)


def check_zero_polynomial(g: Graph, name: str = "") -> CheckReport:
    """A graph with an isolated vertex has no total dominating set."""
    instance = name or f"n={g.n}"
    direct = total_domination_polynomial(g)
    ie = total_domination_polynomial_ie(g)
    if direct.is_zero() and ie.is_zero():
        return CheckReport("zero_polynomial", instance, "pass")
    witness = _graph_witness(g) | {"enumeration": _coeffs(direct), "inclusion_exclusion": _coeffs(ie)}
    return CheckReport("zero_polynomial", instance, "fail", witness=witness)


# ---------------------------------------------------------------------------
# family checks


def family_instances(max_order: int) -> list[tuple[str, Graph, Polynomial]]:
    """(name, constructed graph, closed form) for every family of order <= max_order."""
    out = []
    for n in range(2, max_order + 1):
        out.append((f"complete({n})", gr.complete(n), cf.dt_complete(n)))
    for n in range(2, (max_order - 1) // 2 + 1):
        out.append((f"friendship({n})", gr.friendship(n), cf.dt_friendship(n)))
    for n in range(2, (max_order - 2) // 2 + 1):
        out.append((f"book({n})", gr.book(n), cf.dt_book(n)))
    for m in range(1, max_order):
        for n in range(m, max_order - m + 1):
            out.append((f"complete_bipartite({m},{n})", gr.complete_bipartite(m, n),
                        cf.dt_complete_bipartite(m, n)))
    # G o (m isolated vertices) for several G of each order: the formula
    # only sees the order, provided G has no isolated vertex
    for n_g in range(2, max_order + 1):
        bases = [("complete", gr.complete(n_g)), ("star", gr.star(n_g - 1))]
        if n_g >= 3:
            bases.append(("cycle", gr.cycle(n_g)))
        if n_g >= 2:
            bases.append(("path", gr.path(n_g)))
        for m in range(1, max_order // n_g):
            if n_g * (m + 1) > max_order:
                break
            for label, base in bases:
                out.append((f"corona({label}({n_g}),empty({m}))",
                            gr.corona(base, gr.empty_graph(m)), cf.dt_corona_empty(n_g, m)))
    # (m isolated vertices) o H, which covers K_1 o H at m = 1
    small_h = [("K1", gr.complete(1)), ("K2", gr.complete(2)), ("empty(2)", gr.empty_graph(2)),
               ("P3", gr.path(3)), ("K3", gr.complete(3)), ("C4", gr.cycle(4)),
               ("star(3)", gr.star(3)), ("P4", gr.path(4)), ("K4", gr.complete(4)),
               ("C5", gr.cycle(5))]
    for label, h in small_h:
        for m in range(1, max_order // (h.n + 1) + 1):
            if m * (h.n + 1) > max_order:
                break
            out.append((f"corona(empty({m}),{label})",
                        gr.corona(gr.empty_graph(m), h), cf.dt_empty_corona(h, m)))
    return out


def check_closed_form(name: str, g: Graph, formula: Polynomial) -> CheckReport:
    enumerated = total_domination_polynomial(g)
    if enumerated == formula:
        return CheckReport("closed_form", name, "pass", metrics={"n": g.n})
    witness = _graph_witness(g) | {"formula": _coeffs(formula), "enumeration": _coeffs(enumerated)}
    return CheckReport("closed_form", name, "fail", witness=witness, metrics={"n": g.n})


def check_book_published(n: int) -> CheckReport:
    """The book-graph expression as printed, against enumeration."""
    g = gr.book(n)
    enumerated = total_domination_polynomial(g)
    printed = cf.dt_book_published(n)
    diff = printed - enumerated
    metrics = {"n": n, "difference": _coeffs(diff)}
    if diff.is_zero():
        return CheckReport("book_published_formula", f"book({n})", "pass", metrics=metrics)
    witness = _graph_witness(g) | {"printed": _coeffs(printed), "enumeration": _coeffs(enumerated)}
    return CheckReport("book_published_formula", f"book({n})", "fail",
                       witness=witness, metrics=metrics)


def check_domination_number(name: str, g: Graph, expected: int) -> CheckReport:
    table = count_total_dominating_sets(g).counts
    got = next((i for i, c in enumerate(table) if c), None)
    metrics = {"gamma_t": got, "expected": expected}
    if got == expected:
        return CheckReport("domination_number", name, "pass", metrics=metrics)
    return CheckReport("domination_number", name, "fail",
                       witness=_graph_witness(g) | {"counts": [str(c) for c in table]},
                       metrics=metrics)


def domination_number_instances(max_order: int) -> list[tuple[str, Graph, int]]:
    out = []
    for n in range(2, max_order + 1):
        out.append((f"complete({n})", gr.complete(n), 2))
    for n in range(2, (max_order - 1) // 2 + 1):
        out.append((f"friendship({n})", gr.friendship(n), 2))
    for n in range(2, (max_order - 2) // 2 + 1):
        out.append((f"book({n})", gr.book(n), 2))
    # G o H with G free of isolated vertices: gamma_t = |V(G)|
    bases = lambda k: [("complete", gr.complete(k)), ("path", gr.path(k))] + (
        [("cycle", gr.cycle(k))] if k >= 3 else [])
    hs = [("K1", gr.complete(1)), ("K2", gr.complete(2)), ("empty(2)", gr.empty_graph(2)),
          ("P3", gr.path(3))]
    for k in range(2, max_order + 1):
        for hl, h in hs:
            if k * (1 + h.n) > max_order:
                continue
            for gl, base in bases(k):
                out.append((f"corona({gl}({k}),{hl})", gr.corona(base, h), k))
    return out


def check_kn_even_no_real(n: int) -> CheckReport:
    """No nonzero real root of (x+1)^n - n x - 1 for even n (exact Sturm)."""
    if n < 2 or n % 2:
        raise InputError("check_kn_even_no_real needs an even n >= 2")
    p = cf.dt_complete(n)
    _, q = p.deflate_zero()
    half = Fraction(1, 2)
    pieces = {}
    for label, iv in (("(-inf,-1/2)", (-math.inf, -half)), ("(-1/2,0)", (-half, 0)),
                      ("(0,1/2)", (0, half)), ("(1/2,inf)", (half, math.inf))):
        pieces[label] = count_real_roots(q, iv)
    # the deflated polynomial is nonzero at the cut points (checked by count_real_roots)
    total = sum(pieces.values())
    metrics = {"n": n, "counts": pieces, "nonzero_real_roots": total}
    if total == 0:
        return CheckReport("kn_even_no_real", f"complete({n})", "pass", metrics=metrics)
    return CheckReport("kn_even_no_real", f"complete({n})", "fail",
                       witness={"coeffs": _coeffs(p)}, metrics=metrics)


def check_bn_no_nonzero_real(n: int) -> CheckReport:
    """No nonzero real root of D_t(B_n) (exact Sturm on the enumerated-true form)."""
    if n < 2:
        raise InputError("check_bn_no_nonzero_real needs n >= 2")
    p = cf.dt_book(n)
    count = count_nonzero_real_roots(p)
    printed = count_nonzero_real_roots(cf.dt_book_published(n))
    metrics = {"n": n, "nonzero_real_roots": count, "printed_formula_nonzero_real_roots": printed}
    if count == 0:
        return CheckReport("bn_no_nonzero_real", f"book({n})", "pass", metrics=metrics)
    # D_t(B_n) = x^2 ((x+1)^n + x^(n-1))^2; the real zeros are double
    real = sorted(r.value.real for r in find_roots(p).roots if abs(r.value.imag) < 1e-9)
    witness = {"coeffs": _coeffs(p), "approx_real_roots": [fmt_float(x) for x in real]}
    return CheckReport("bn_no_nonzero_real", f"book({n})", "fail", witness=witness, metrics=metrics)


def _inner_log_endpoint(n: int) -> Fraction:
    """A rational strictly between -n and -ln(n), just left of -ln(n)."""
    return -(Fraction(math.log(n)) + Fraction(1, 10 ** 9))


def check_fn_root_interval(n: int) -> CheckReport:
    """Sign test and Sturm count for a real root of D_t(F_n) in (-n, -ln n).

    The statement is asymptotic, so the per-n report is descriptive.
    """
    if n < 2:
        raise InputError("check_fn_root_interval needs n >= 2")
    p = cf.dt_friendship(n)
    left = Fraction(-n)
    right = _inner_log_endpoint(n)
    while p.eval_rational(left) == 0:
        left += Fraction(1, 10 ** 12)
    while p.eval_rational(right) == 0:
        right -= Fraction(1, 10 ** 12)
    f_left = p.eval_rational(left)
    f_right = p.eval_rational(right)
    sturm = count_real_roots(p, (left, right))
    sign_condition = f_left < 0 < f_right
    metrics = {
        "n": n,
        "sign_at_minus_n": (f_left > 0) - (f_left < 0),
        "sign_at_minus_ln_n": (f_right > 0) - (f_right < 0),
        "sign_condition": sign_condition,
        "sturm_count": sturm,
        "right_endpoint": fmt_float(float(right)),
    }
    status = "pass" if (sign_condition or sturm >= 1) else "fail"
    witness = None if status == "pass" else {"coeffs_degree": p.degree, "n": n}
    return CheckReport("fn_root_interval", f"friendship({n})", status, level="info",
                       witness=witness, metrics=metrics)


def fn_interval_summary(reports: list[CheckReport]) -> CheckReport:
    """Least n from which every tested n has a Sturm-certified root."""
    ns = [r.metrics["n"] for r in reports]
    certified = {r.metrics["n"]: r.metrics["sturm_count"] >= 1 for r in reports}
    sign_ok = {r.metrics["n"]: r.metrics["sign_condition"] for r in reports}
    threshold = None
    for n in sorted(ns, reverse=True):
        if certified[n]:
            threshold = n
        else:
            break
    first = min((n for n in ns if certified[n]), default=None)
    first_sign = min((n for n in ns if sign_ok[n]), default=None)
    metrics = {"range": [min(ns), max(ns)], "least_certified_n": first,
               "persistent_from_n": threshold, "least_sign_condition_n": first_sign,
               "uncertified": [n for n in sorted(ns) if not certified[n]]}
    instance = f"friendship({min(ns)}..{max(ns)})"
    if threshold is not None and first == threshold:
        return CheckReport("fn_interval_summary", instance, "pass", metrics=metrics)
    witness = {"certified": {str(k): v for k, v in sorted(certified.items())}}
    return CheckReport("fn_interval_summary", instance, "fail", witness=witness, metrics=metrics)


def limit_lemma_value(n: int) -> float:
    ln = math.log(n)
    return ln * ((ln - 1) / n) ** n


def check_limit_lemma(n: int) -> CheckReport:
    value = limit_lemma_value(n)
    metrics = {"n": n, "value": value}
    if value < LEMMA_BOUND:
        return CheckReport("limit_lemma", f"n={n}", "pass", metrics=metrics)
    return CheckReport("limit_lemma", f"n={n}", "fail", witness={"n": n, "value": value},
                       metrics=metrics)


def kmn_analytic_roots(m: int, n: int) -> list[complex]:
    """omega - 1 over omega^m = 1 and omega^n = 1, with the two omega = 1 giving 0 twice."""
    out = [0j, 0j]
    for k in (m, n):
        out += [complex(math.cos(2 * math.pi * j / k), math.sin(2 * math.pi * j / k)) - 1
                for j in range(1, k)]
    return out


def _match_multisets(numeric: list[complex], analytic: list[complex]) -> float:
    """Greedy nearest matching; returns the worst matched distance (inf on size mismatch)."""
    if len(numeric) != len(analytic):
        return math.inf
    pool = list(analytic)
    worst = 0.0
    for z in sorted(numeric, key=lambda c: (c.real, c.imag)):
        j = min(range(len(pool)), key=lambda i: abs(pool[i] - z))
        worst = max(worst, abs(pool[j] - z))
        pool.pop(j)
    return worst


def check_kmn_circle(m: int, n: int) -> CheckReport:
    if m < 1 or n < 1 or m + n > 60:
        raise InputError("check_kmn_circle needs m, n >= 1 and m + n <= 60")
    instance = f"complete_bipartite({m},{n})"
    rs = find_roots(cf.dt_complete_bipartite(m, n))
    if not rs.converged:
        return CheckReport("kmn_circle", instance, "unconverged",
                           metrics={"unconverged": sum(not r.converged for r in rs.roots)})
    off = max((abs(abs(r.value + 1) - 1) for r in rs.roots), default=0.0)
    numeric = [0j] * rs.zero_multiplicity + rs.values()
    match = _match_multisets(numeric, kmn_analytic_roots(m, n))
    metrics = {"max_circle_deviation": off, "max_match_distance": match,
               "zero_multiplicity": rs.zero_multiplicity}
    if off <= CIRCLE_TOL and match <= MATCH_TOL:
        return CheckReport("kmn_circle", instance, "pass", metrics=metrics)
    witness = {"m": m, "n": n, "roots": rs.to_dict()["roots"]}
    return CheckReport("kmn_circle", instance, "fail", witness=witness, metrics=metrics)


# ---------------------------------------------------------------------------
# campaigns


DEFAULT_CORPUS = {"orders": [4, 14], "probabilities": [0.2, 0.5, 0.8], "per_cell": 200}

CORPUS_CHECKS = ("ie_identity", "monotone_counts", "disc_bound", "integer_roots",
                 "corpus_unimodality", "zero_polynomial")

DEFAULT_PARAMS: dict[str, dict[str, Any]] = {
    "closed_forms": {"max_order": 12},
    "book_published_formula": {"range": [2, 5]},
    "domination_number": {"max_order": 12},
    "family_ie_identity": {"max_order": 12},
    "ie_identity": {},
    "monotone_counts": {},
    "disc_bound": {},
    "integer_roots": {},
    "zero_polynomial": {},
    "corpus_unimodality": {},
    "family_unimodality": {"range": [2, 50]},
    "kn_even": {"range": [2, 20]},
    "bn_real": {"range": [2, 30]},
    "fn_interval": {"range": [2, 100]},
    "limit_lemma": {"range": [20, 100]},
    "kmn_circle": {"max_total": 40},
}


def default_config(seed: int = 42) -> dict[str, Any]:
    return {"seed": seed, "corpus": dict(DEFAULT_CORPUS), "checks": list(DEFAULT_PARAMS)}


def _range(params, key="range") -> range:
    lo, hi = params[key]
    return range(int(lo), int(hi) + 1)


class _CorpusCache:
    def __init__(self, entries: list[CorpusEntry]):
        self.entries = entries
        self._counts: dict[str, tuple[int, ...]] = {}

    def counts(self, e: CorpusEntry) -> tuple[int, ...]:
        if e.name not in self._counts:
            self._counts[e.name] = count_total_dominating_sets(e.graph).counts
        return self._counts[e.name]

    def poly(self, e: CorpusEntry) -> Polynomial:
        return Polynomial(self.counts(e))


def _run_corpus_check(name: str, cache: _CorpusCache) -> list[CheckReport]:
    out = []
    for e in cache.entries:
        isolated = e.graph.has_isolated_vertex()
        if name == "ie_identity":
            out.append(check_ie_identity(e.graph, e.name, dt=cache.poly(e)))
        elif name == "monotone_counts":
            out.append(check_monotone_counts(e.graph, e.name, counts=cache.counts(e)))
        elif name == "zero_polynomial":
            if isolated:
                out.append(check_zero_polynomial(e.graph, e.name))
        elif isolated:
            continue
        elif name == "disc_bound":
            out.append(check_disc_bound(e.graph, name=e.name, dt=cache.poly(e)))
        elif name == "integer_roots":
            out.append(check_integer_root_conjecture(e.graph, e.name, dt=cache.poly(e)))
        elif name == "corpus_unimodality":
            out.append(check_unimodality(cache.poly(e), e.name, graph=e.graph))
    return out


def _run_named(name: str, params: dict[str, Any], cache_factory: Callable[[], _CorpusCache]):
    if name in CORPUS_CHECKS:
        return _run_corpus_check(name, cache_factory())
    if name == "closed_forms":
        return [check_closed_form(*inst) for inst in family_instances(int(params["max_order"]))]
    if name == "book_published_formula":
        return [check_book_published(n) for n in _range(params)]
    if name == "domination_number":
        return [check_domination_number(*inst)
                for inst in domination_number_instances(int(params["max_order"]))]
    if name == "family_ie_identity":
        return [check_ie_identity(g, label) for label, g, _ in
                family_instances(int(params["max_order"]))]
    if name == "family_unimodality":
        out = []
        for n in _range(params):
            out.append(check_unimodality(cf.dt_complete(n), f"complete({n})", level="theorem"))
        for n in _range(params):
            out.append(check_unimodality(cf.dt_friendship(n), f"friendship({n})", level="theorem"))
        return out
    if name == "kn_even":
        return [check_kn_even_no_real(n) for n in _range(params) if n % 2 == 0]
    if name == "bn_real":
        return [check_bn_no_nonzero_real(n) for n in _range(params)]
    if name == "fn_interval":
        per_n = [check_fn_root_interval(n) for n in _range(params)]
        return per_n + [fn_interval_summary(per_n)]
    if name == "limit_lemma":
        return [check_limit_lemma(n) for n in _range(params)]
    if name == "kmn_circle":
        total = int(params["max_total"])
        return [check_kmn_circle(m, n) for m in range(1, total) for n in range(m, total - m + 1)]
    raise InputError(f"unknown check {name!r}")


def _normalise_checks(raw) -> list[tuple[str, dict[str, Any]]]:
    if not isinstance(raw, list):
        raise InputError("'checks' must be a list")
    out = []
    for item in raw:
        if isinstance(item, str):
            name, extra = item, {}
        elif isinstance(item, dict) and isinstance(item.get("name"), str):
            name = item["name"]
            extra = {k: v for k, v in item.items() if k != "name"}
        else:
            raise InputError(f"malformed check entry {item!r}")
        if name not in DEFAULT_PARAMS:
            raise InputError(f"unknown check {name!r}")
        unknown = set(extra) - set(DEFAULT_PARAMS[name])
        if unknown:
            raise InputError(f"check {name!r} has unknown parameters {sorted(unknown)}")
        out.append((name, DEFAULT_PARAMS[name] | extra))
    return out


def run_campaign(config: dict[str, Any]) -> list[CheckReport]:
    """Run the checks named in ``config`` in order; deterministic given the seed.

    ``config`` keys: ``seed`` (int), ``corpus`` ({orders: [lo, hi],
    probabilities, per_cell}) and ``checks`` (names or {"name": ..., params}).
    An empty config runs nothing.
    """
    if not isinstance(config, dict):
        raise InputError("campaign config must be a JSON object")
    unknown = set(config) - {"seed", "corpus", "checks"}
    if unknown:
        raise InputError(f"unknown config keys {sorted(unknown)}")
    checks = _normalise_checks(config.get("checks", []))
    seed = config.get("seed", 42)
    if not isinstance(seed, int):
        raise InputError("seed must be an integer")
    corpus_cfg = DEFAULT_CORPUS | config.get("corpus", {})
    try:
        lo, hi = corpus_cfg["orders"]
        probs = [float(p) for p in corpus_cfg["probabilities"]]
        per_cell = int(corpus_cfg["per_cell"])
    except (TypeError, ValueError, KeyError) as exc:
        raise InputError(f"malformed corpus section: {exc}") from None

    cache: list[_CorpusCache] = []

    def cache_factory() -> _CorpusCache:
        if not cache:
            cache.append(_CorpusCache(random_corpus(seed, range(lo, hi + 1), probs, per_cell)))
        return cache[0]

    reports: list[CheckReport] = []
    for name, params in checks:
        reports += _run_named(name, params, cache_factory)
    return reports


@dataclass
class CampaignSummary:
    total: int = 0
    by_status: dict[str, int] = field(default_factory=dict)
    theorem_failures: list[str] = field(default_factory=list)
    conjecture_failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.theorem_failures


def summarize(reports: list[CheckReport]) -> CampaignSummary:
    s = CampaignSummary(total=len(reports))
    for r in reports:
        s.by_status[r.status] = s.by_status.get(r.status, 0) + 1
        if r.status == "fail":
            tag = f"{r.check_id}:{r.instance}"
            if r.level == "theorem":
                s.theorem_failures.append(tag)
            elif r.level == "conjecture":
                s.conjecture_failures.append(tag)
    return s


def reports_to_jsonl(reports: list[CheckReport]) -> str:
    return "".join(r.to_json() + "\n" for r in reports)


def load_config(path) -> dict[str, Any]:
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON ({exc})") from None
