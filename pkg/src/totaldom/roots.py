"""Where the zeros of an integer polynomial are.

Three routes, of decreasing exactness:

* :func:`integer_roots` - exact big-integer evaluation on a finite window;
* :func:`count_real_roots` - exact Sturm counting over the integers;
* :func:`find_roots` - complex roots in double precision by the Aberth
  simultaneous iteration, run on each exact square-free factor so every
  root it iterates on is simple.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

try:  # GMP integers make the long remainder sequences ~7x faster
    from gmpy2 import mpz as _big
except ImportError:  # pragma: no cover
    _big = int

from .errors import InputError, ResourceError
from .graph import Graph, min_degree
from .polynomial import Polynomial
from .report import CheckReport

STEP_TOL = 1e-12
MAX_ITER = 1000
CLUSTER_TOL = 1e-8
RESIDUAL_TOL = 1e-9
FLOAT_LIMIT = 10 ** 300
DISC_SLACK = 1e-6


# ---------------------------------------------------------------------------
# exact integer polynomial helpers; lists are low-to-high coefficient order


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def primitive(a: list[int]) -> list[int]:
    """Divide out the content and make the leading coefficient positive."""
    a = _trim(list(a))
    if not a:
        return a
    g = math.gcd(*a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def pseudo_remainder(a: list[int], b: list[int]) -> list[int]:
    """lc(b)^(deg a - deg b + 1) * a  mod  b."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    shift = len(a) - 1 - db
    if shift < 0:
        return a
    for _ in range(shift + 1):
        if len(a) - 1 < db:
            a = [c * lb for c in a]
            continue
        lead = a[-1]
        k = len(a) - 1 - db
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[i + k] -= lead * c
        a.pop()
        _trim(a)
    return a


def poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd over Z[x] via the primitive remainder sequence."""
    a, b = primitive(a), primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = pseudo_remainder(a, b)
        a, b = b, primitive(r)
    return primitive(a)


def exact_quotient(a: list[int], b: list[int]) -> list[int]:
    """a / b for a primitive divisor b that divides a in Q[x]."""
    a = list(a)
    db = len(b) - 1
    out = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        lead = a[k + db]
        q, r = divmod(lead, b[-1])
        if r:
            raise ArithmeticError("divisor does not divide exactly")
        out[k] = q
        for i, c in enumerate(b):
            a[i + k] -= q * c
    if any(a):
        raise ArithmeticError("nonzero remainder in exact division")
    return _trim(out)


def _diff(a: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(a)][1:]


def squarefree_decomposition(p: Polynomial) -> list[tuple[list[int], int]]:
    """p = c * prod f_i^i with f_i square-free, primitive and pairwise coprime.

    Peels repeated gcds: layer i is the product of the factors of
    multiplicity >= i, so f_i = layer_i / layer_(i+1).  Only nonconstant
    factors are returned, as (coefficients, multiplicity).
    """
    a = primitive(p.coeffs)
    if len(a) <= 1:
        return []
    layers = []
    cur = a
    while len(cur) > 1:
        g = poly_gcd(cur, _diff(cur))
        layers.append(exact_quotient(cur, g))
        cur = g
    out = []
    for i, layer in enumerate(layers):
        nxt = layers[i + 1] if i + 1 < len(layers) else [1]
        f = exact_quotient(layer, nxt)
        if len(f) > 1:
            out.append((primitive(f), i + 1))
    return out


# ---------------------------------------------------------------------------
# Sturm counting


def sturm_sequence(a: list[int]) -> list[list[int]]:
    """Sturm chain p, p', -rem(p, p'), ... of an integer polynomial.

    Built as a subresultant remainder sequence (exact divisions by known
    factors keep coefficient growth linear) and each member is then
    sign-corrected, so it is a positive multiple of the classical Sturm
    member.  For non-square-free input the chain ends at gcd(p, p').
    """
    a = [_big(c) for c in primitive(a)]
    if len(a) <= 1:
        return [a]
    prev, cur = a, _diff(a)
    signs = [1, 1]
    chain = [prev, cur]
    psi = -1
    delta = len(prev) - len(cur)
    beta = -1 if delta % 2 == 0 else 1  # (-1)^(delta+1)
    while len(cur) > 1:
        r = pseudo_remainder(prev, cur)
        r = _trim(r)
        if not r:
            break
        nxt = [c // beta for c in r]
        # prem = lc^(delta+1) * rem and rem is linear in the dividend
        lc_sign = 1 if cur[-1] > 0 else -1
        factor_sign = (lc_sign ** (delta + 1)) * (1 if beta > 0 else -1)
        signs.append(-factor_sign * signs[-2])
        chain.append(nxt)
        # subresultant bookkeeping for the next step
        lc = cur[-1]
        if delta == 0:
            pass
        elif delta == 1:
            psi = -lc
        else:
            psi = _exact_div((-lc) ** delta, psi ** (delta - 1))
        new_delta = len(cur) - len(nxt)
        beta = -lc * psi ** new_delta
        prev, cur, delta = cur, nxt, new_delta
    return [f if sg > 0 else [-c for c in f] for f, sg in zip(chain, signs)]


def _exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact division in subresultant sequence")
    return q


def _sign_at(a: list[int], point) -> int:
    if point == math.inf:
        return (a[-1] > 0) - (a[-1] < 0)
    if point == -math.inf:
        s = (a[-1] > 0) - (a[-1] < 0)
        return s if (len(a) - 1) % 2 == 0 else -s
    x = Fraction(point)
    num, den = x.numerator, x.denominator
    acc = 0
    scale = 1
    for c in reversed(a):
        acc = acc * num + c * scale
        scale *= den
    return (acc > 0) - (acc < 0)


def _variations(seq, point) -> int:
    signs = [s for s in (_sign_at(f, point) for f in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _as_endpoint(value):
    if isinstance(value, float) and math.isinf(value):
        return value
    return Fraction(value)


def count_real_roots(p: Polynomial, interval=(-math.inf, math.inf)) -> int:
    """Number of distinct real roots of ``p`` in the open interval (a, b).

    Endpoints are rationals (ints, Fractions, exact floats) or +-inf; a finite
    endpoint that is itself a root is rejected so the caller can move it.
    """
    if p.is_zero():
        raise InputError("the zero polynomial has every number as a root")
    a, b = (_as_endpoint(v) for v in interval)
    if not a < b:
        raise InputError("empty interval")
    for end in (a, b):
        if not (isinstance(end, float) and math.isinf(end)) and p.eval_rational(end) == 0:
            raise InputError(f"endpoint {end} is a root; perturb the interval")
    if p.degree == 0:
        return 0
    seq = sturm_sequence(list(p.coeffs))
    return _variations(seq, a) - _variations(seq, b)


def count_nonzero_real_roots(p: Polynomial) -> int:
    _, q = p.deflate_zero()
    return count_real_roots(q)


# ---------------------------------------------------------------------------
# integer roots


def integer_roots(p: Polynomial, radius: float) -> list[int]:
    """Every integer z with |z + 1| <= ceil(radius) and p(z) == 0, ascending."""
    if p.is_zero():
        raise InputError("the zero polynomial vanishes everywhere")
    r = math.ceil(radius)
    found = [z for z in range(-1 - r, r) if p.eval_int(z) == 0]
    if p.coeffs[0] == 0 and 0 not in found:
        found.append(0)
    return sorted(found)


# ---------------------------------------------------------------------------
# complex roots


@dataclass(frozen=True)
class Root:
    value: complex
    multiplicity: int
    residual: float
    converged: bool = True


@dataclass
class RootSet:
    zero_multiplicity: int
    roots: list[Root] = field(default_factory=list)
    leading: int = 1
    iterations: int = 0

    @property
    def converged(self) -> bool:
        return all(r.converged for r in self.roots)

    @property
    def degree(self) -> int:
        return self.zero_multiplicity + sum(r.multiplicity for r in self.roots)

    def values(self, with_multiplicity: bool = True) -> list[complex]:
        out = []
        for r in self.roots:
            out += [r.value] * (r.multiplicity if with_multiplicity else 1)
        return out

    def to_dict(self) -> dict:
        return {
            "zero_multiplicity": self.zero_multiplicity,
            "roots": [
                {
                    "re": fmt_float(r.value.real),
                    "im": fmt_float(r.value.imag),
                    "multiplicity": r.multiplicity,
                    "residual": fmt_float(r.residual),
                    "converged": r.converged,
                }
                for r in self.roots
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RootSet":
        data = json.loads(text)
        roots = [
            Root(complex(float(r["re"]), float(r["im"])), int(r["multiplicity"]),
                 float(r["residual"]), bool(r["converged"]))
            for r in data["roots"]
        ]
        return cls(int(data["zero_multiplicity"]), roots)


def fmt_float(x: float) -> str:
    """17 significant digits: round-trips every double."""
    if x == 0:
        x = 0.0  # drop the sign of -0.0
    return format(x, ".17g")


def _newton_ratio(c: np.ndarray, z: np.ndarray) -> np.ndarray:
    """p(z)/p'(z) for float coefficients ``c`` (low to high).

    Points outside the unit disc go through the reversed polynomial in
    w = 1/z, which keeps Horner from overflowing at large |z|.
    """
    d = len(c) - 1
    out = np.empty(z.shape, dtype=complex)
    inner = np.abs(z) <= 1
    if inner.any():
        zi = z[inner]
        p = np.full(zi.shape, c[-1], dtype=complex)
        dp = np.zeros(zi.shape, dtype=complex)
        for k in range(d - 1, -1, -1):
            dp = dp * zi + p
            p = p * zi + c[k]
        out[inner] = p / dp
    outer = ~inner
    if outer.any():
        zo = z[outer]
        w = 1 / zo
        rc = c[::-1]
        q = np.full(zo.shape, rc[-1], dtype=complex)
        dq = np.zeros(zo.shape, dtype=complex)
        for k in range(d - 1, -1, -1):
            dq = dq * w + q
            q = q * w + rc[k]
        out[outer] = zo * q / (d * q - w * dq)
    return out


def relative_residual(coeffs, z: complex) -> float:
    """|p(z)| / sum |c_i| |z|^i, evaluated without overflow."""
    c = [float(v) for v in coeffs]
    if abs(z) > 1:
        c = c[::-1]
        z = 1 / z
    num = 0j
    den = 0.0
    az = abs(z)
    for v in reversed(c):
        num = num * z + v
        den = den * az + abs(v)
    return abs(num) / den if den else 0.0


def _initial_guesses(c: np.ndarray) -> np.ndarray:
    d = len(c) - 1
    center = -c[d - 1] / (d * c[d])
    # magnitude of p at the centre sets the starting radius
    shifted = np.polynomial.polynomial.polyval(center, c)
    if shifted != 0 and np.isfinite(shifted):
        radius = math.exp((math.log(abs(shifted)) - math.log(abs(c[d]))) / d)
    else:
        radius = 1.0
    radius = max(radius, 1e-3)
    angles = 2 * math.pi * np.arange(d) / d + 0.4
    return center + radius * np.exp(1j * angles)


def _exact_ratio(coeffs: list[int], z: complex) -> complex:
    """p(z)/p'(z) with p, p' evaluated exactly at the binary point z.

    z = (a + b i) / den with den a power of two; homogenised Horner keeps
    everything in Gaussian integers and den cancels in the ratio.
    """
    fr, fi = Fraction(z.real), Fraction(z.imag)
    den = max(fr.denominator, fi.denominator)
    a = fr.numerator * (den // fr.denominator)
    b = fi.numerator * (den // fi.denominator)
    pr, pi = coeffs[-1], 0
    dr, di = 0, 0
    scale = 1
    for c in reversed(coeffs[:-1]):
        scale *= den
        # dp <- dp * (a + bi) + den * p
        dr, di = dr * a - di * b + den * pr, dr * b + di * a + den * pi
        # p <- p * (a + bi) + c * den^(j+1)
        pr, pi = pr * a - pi * b + c * scale, pr * b + pi * a
    norm = dr * dr + di * di
    if norm == 0:
        return complex(math.inf, 0)
    re = pr * dr + pi * di
    im = pi * dr - pr * di
    return complex(re / norm, im / norm)


def _aberth_correction(ratio: np.ndarray, z: np.ndarray, idx: np.ndarray) -> np.ndarray:
    diff = z[idx][:, None] - z[None, :]
    diff[np.arange(len(idx)), idx] = np.inf
    s = np.sum(1.0 / diff, axis=1)
    return ratio / (1 - ratio * s)


def _aberth(coeffs: list[int], tol: float, max_iter: int,
            float_iter: int = 100) -> tuple[np.ndarray, np.ndarray, int]:
    """Aberth iteration on a square-free integer polynomial.

    A float Horner ratio drives the first ``float_iter`` sweeps.  Rounding
    noise can fake convergence there, so every root then goes through
    sweeps with the exact ratio until its exact step is below tolerance.
    """
    c = np.array([float(v) for v in coeffs])
    c = c / np.max(np.abs(c))
    d = len(c) - 1
    if d == 1:
        return np.array([complex(Fraction(-coeffs[0], coeffs[1]))]), np.array([True]), 0
    z = _initial_guesses(c)
    active = np.ones(d, dtype=bool)
    it = 0
    exact = False
    while it < max_iter:
        if not active.any():
            if exact:
                break
            exact = True
            active[:] = True
        if it >= float_iter and not exact:
            exact = True
            active[:] = True
        it += 1
        idx = np.flatnonzero(active)
        za = z[idx]
        if exact:
            ratio = np.array([_exact_ratio(coeffs, complex(v)) for v in za])
        else:
            ratio = _newton_ratio(c, za)
        step = _aberth_correction(ratio, z, idx)
        bad = ~np.isfinite(step)
        if bad.any():
            step[bad] = 1e-7 * (1 + np.abs(za[bad]))
        z[idx] = za - step
        done = np.abs(step) < tol * (1 + np.abs(z[idx]))
        active[idx[done]] = False
    if not exact:
        active[:] = True
    return z, ~active, it


def find_roots(p: Polynomial, *, tol: float = STEP_TOL, max_iter: int = MAX_ITER,
               cluster_tol: float = CLUSTER_TOL,
               residual_tol: float = RESIDUAL_TOL) -> RootSet:
    """All complex roots of ``p`` with multiplicities.

    x^k is split off exactly, the rest is factored square-free by repeated gcds and
    each factor is solved by the Aberth iteration from points on a circle.
    Roots closer than ``cluster_tol`` are then merged.  A root is flagged
    unconverged if its last step or its relative residual is too large.
    """
    if p.is_zero():
        raise InputError("the zero polynomial has no root set")
    if p.degree < 1:
        raise InputError("a nonzero constant has no roots")
    k, q = p.deflate_zero()
    if any(abs(c) > FLOAT_LIMIT for c in q.coeffs):
        raise ResourceError("coefficients exceed the double range; use the exact routes")
    found: list[tuple[complex, int, bool]] = []
    iterations = 0
    for factor, mult in squarefree_decomposition(q):
        zs, ok, it = _aberth(factor, tol, max_iter)
        iterations = max(iterations, it)
        found += [(complex(z), mult, bool(o)) for z, o in zip(zs, ok)]

    merged: list[list] = []
    for z, m, ok in found:
        for entry in merged:
            if abs(entry[0] - z) <= cluster_tol:
                entry[1] += m
                entry[2] = entry[2] and ok
                break
        else:
            merged.append([z, m, ok])

    roots = []
    for z, m, ok in merged:
        res = relative_residual(q.coeffs, z)
        roots.append(Root(z, m, res, ok and res <= residual_tol))
    roots.sort(key=lambda r: (round(r.value.real, 12), round(r.value.imag, 12)))
    return RootSet(k, roots, leading=p.leading, iterations=iterations)


def reconstruct(rs: RootSet) -> np.ndarray:
    """Coefficients (low to high) of leading * x^k * prod (x - r)^m."""
    poly = np.array([1.0 + 0j])
    for r in rs.roots:
        for _ in range(r.multiplicity):
            poly = np.convolve(poly, np.array([-r.value, 1.0]))
    poly = np.concatenate([np.zeros(rs.zero_multiplicity), poly])
    return poly * rs.leading


# ---------------------------------------------------------------------------
# disc bound


def disc_bound_radius(g: Graph) -> float:
    """(2^n - 1)^(1/delta) for a graph of order n and minimum degree delta."""
    delta = min_degree(g)
    if delta == 0:
        raise InputError("minimum degree 0: the disc bound needs delta >= 1")
    return math.exp(math.log(2 ** g.n - 1) / delta)


def check_disc_bound(g: Graph, *, name: str = "", dt: Polynomial | None = None,
                     cap: int | None = None) -> CheckReport:
    """Every root z of D_t(G) has |z + 1| <= (2^n - 1)^(1/delta)."""
    from .enumeration import total_domination_polynomial

    instance = name or f"n={g.n} edges={g.edges()}"
    if min_degree(g) == 0:
        return CheckReport("disc_bound", instance, "skipped", metrics={"reason": "delta=0"})
    radius = disc_bound_radius(g)
    if dt is None:
        dt = total_domination_polynomial(g, cap=cap)
    rs = find_roots(dt)
    worst = 1.0 if rs.zero_multiplicity else 0.0
    outside = []
    unconverged = 0
    for r in rs.roots:
        if not r.converged:
            unconverged += 1
            continue
        dist = abs(r.value + 1)
        worst = max(worst, dist)
        if dist > radius + DISC_SLACK:
            outside.append([fmt_float(r.value.real), fmt_float(r.value.imag)])
    metrics = {"radius": radius, "max_abs_z_plus_1": worst, "unconverged": unconverged,
               "n": g.n, "min_degree": min_degree(g)}
    if outside:
        witness = {"edges": g.edges(), "n": g.n, "coeffs": [str(c) for c in dt.coeffs],
                   "roots_outside": outside}
        return CheckReport("disc_bound", instance, "fail", witness=witness, metrics=metrics)
    status = "unconverged" if unconverged else "pass"
    return CheckReport("disc_bound", instance, status, metrics=metrics)
