"""Independent numeric verification: complex evaluation of the symbolic
results against brute-force truncated summation of the defining series.

The defining side below is written directly from the defining integral
formulas (Shintani values, unit-integral tables, geometric tails) in plain complex
arithmetic; it shares no code with the exact ExpPoly machinery it checks.
q need not be a prime power: every identity is rational in q^{1/2}, so any
real q > 1 exercises the algebra.  Defaults q = 9, s = 2 keep every
geometric ratio comfortably inside the unit disc.
"""
from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .ratfunc import LaurentPoly, RatFunc, VAR_NAMES
from . import zeta


class EvaluationError(ZeroDivisionError):
    """A denominator factor vanished (numerically) at the evaluation point."""


@dataclass(frozen=True)
class NumericPoint:
    q: float = 9.0
    s: float = 2.0
    a: complex = 1j
    b1: complex = 1.0
    b2: complex = -1j
    eps: int = -1
    seed: int = 0

    def symbol_values(self) -> dict:
        return {
            "H": complex(math.sqrt(self.q)),
            "Z": complex(self.q ** (-3.0 * self.s)),
            "a": self.a,
            "b1": self.b1,
            "b2": self.b2,
            "eps": complex(self.eps),
        }


def random_points(count: int, seed: int = 0, q: float = 9.0, s: float = 2.0):
    """Seeded unit-modulus Satake samples, alternating eps = -1, +1."""
    points = []
    for i in range(count):
        rng = random.Random(1_000_003 * seed + i)
        a, b1, b2 = (cmath.exp(2j * math.pi * rng.random()) for _ in range(3))
        points.append(NumericPoint(q, s, a, b1, b2, -1 if i % 2 == 0 else 1, seed))
    return points


def _eval_poly(p: LaurentPoly, vals: dict) -> complex:
    total = 0j
    names = VAR_NAMES
    for e, c in p.terms.items():
        v = complex(c)
        for i, x in enumerate(e):
            if x:
                v *= vals[names[i]] ** x
        total += v
    return total


def eval_ratfunc(f: RatFunc, pt: NumericPoint) -> complex:
    """Evaluate num/den, failing loudly (with the factor) near a denominator zero."""
    vals = pt.symbol_values()
    den = 1.0 + 0j
    for factor, mult in f.denominator_factors():
        fv = _eval_poly(factor, vals)
        if abs(fv) <= 1e-12:
            raise EvaluationError(f"denominator factor vanishes at point: {factor.to_text()}")
        den *= fv ** mult
    return _eval_poly(f.num, vals) / den


def neumaier_sum(terms) -> complex:
    """Compensated summation, separately on real and imaginary parts."""
    def parts(seq):
        s = 0.0
        comp = 0.0
        for x in seq:
            t = s + x
            if abs(s) >= abs(x):
                comp += (s - t) + x
            else:
                comp += (x - t) + s
            s = t
        return s + comp

    terms = list(terms)
    return complex(parts([t.real for t in terms]), parts([t.imag for t in terms]))


def truncated_series(term, count: int, ratio_bound: float):
    """(partial sum to count-1, geometric tail bound).

    The tail constant calibrates |term_n| <= C * ratio_bound^n on the last
    five computed terms; the bound is C * rho^count / (1 - rho).
    """
    if ratio_bound >= 1.0:
        raise EvaluationError("series diverges: ratio bound >= 1")
    values = [term(n) for n in range(count)]
    total = neumaier_sum(values)
    log_rho = math.log(ratio_bound) if ratio_bound > 0 else -math.inf
    log_c = -math.inf
    for n in range(max(0, count - 5), count):
        mag = abs(values[n])
        if mag > 0:
            log_c = max(log_c, math.log(mag) - n * log_rho)
    if log_c == -math.inf:
        return total, 0.0
    log_tail = log_c + count * log_rho - math.log(1.0 - ratio_bound)
    return total, math.exp(log_tail) if log_tail > -700 else 0.0


# --------------------------------------------------------------------------
# the defining series, straight from the defining formulas, in complex arithmetic


class DefiningSeries:
    """Per-point numeric versions of the defining Whittaker sums."""

    def __init__(self, pt: NumericPoint):
        self.q = pt.q
        self.s = pt.s
        self.a = pt.a
        self.b1 = pt.b1
        self.b2 = pt.b2
        self.eps = float(pt.eps)
        self.Y = pt.q ** (-6.0 * pt.s + 2) * pt.b1 * pt.b2
        self._spherical = {}

    def spherical(self, k: int, l: int) -> complex:
        """W(h(p^k, p^l)) by the Shintani formula."""
        if l < 0:
            return 0j
        cached = self._spherical.get((k, l))
        if cached is None:
            q, s, b1, b2 = self.q, self.s, self.b1, self.b2
            cached = (q ** (-3 * s * (2 * k + l)) * (b1 * b2) ** k * q ** (-l / 2)
                      * (b1 ** (l + 1) - b2 ** (l + 1)) / (b1 - b2))
            self._spherical[(k, l)] = cached
        return cached

    def I_defining(self, n: int) -> complex:
        q, s = self.q, self.s
        total = self.spherical(0, n)
        for m in range(1, n + 1):
            total += ((1 - 1 / q) * q ** ((-6 * s + 1) * m)
                      * (self.b1 * self.b2) ** m * self.spherical(0, n - m))
        return total

    def J1_decomposition(self, n: int, inner_terms: int) -> complex:
        tail = sum((1 - 1 / self.q) * self.Y ** m for m in range(1, inner_terms + 1))
        return self.I_defining(n) * (1 + tail)

    def gauss_unit(self, k: int) -> float:
        if k >= 0:
            return 1 - 1 / self.q
        if k == -1:
            return -1 / self.q
        return 0.0

    def R1_defining(self, n: int) -> complex:
        q, s = self.q, self.s
        prefactor = q ** (-12 * s + 3) * (self.b1 * self.b2) ** 2
        total = self.spherical(0, n - 1) * (1.0 if n - 2 >= 0 else 0.0)
        for m in range(1, n + 3):
            total += q ** m * self.gauss_unit(n - m - 2) * self.spherical(m, n - m - 1)
        return prefactor * total

    def R2_defining(self, n: int, inner_terms: int) -> complex:
        total = sum(self.Y ** m * self.gauss_unit(m + n - 2)
                    for m in range(1, inner_terms + 1))
        return self.I_defining(n) * total

    def J_value(self, n: int) -> complex:
        """The branch closed form, on top of the defining I sums."""
        if n == 0:
            return 1 + self.Y
        if n == 1:
            return self.I_defining(1)
        return (self.I_defining(n) - self.Y ** 2 / self.q * self.I_defining(n - 1)
                + self.q ** (-n) * self.Y ** (n + 1))

    def whittaker_weight(self, n: int) -> complex:
        """q^{3n/2} eps^n ((1 - eps q^{-1/2}/a) a^{n+1} - (1 - eps q^{-1/2} a) a^{-n-1}) / (a - 1/a)."""
        q, a, eps = self.q, self.a, self.eps
        rq = q ** -0.5
        return (q ** (1.5 * n) * eps ** n / (a - 1 / a)
                * ((1 - eps * rq / a) * a ** (n + 1) - (1 - eps * rq * a) * a ** -(n + 1)))

    def final_term(self, n: int) -> complex:
        return self.whittaker_weight(n) * self.J_value(n)

    def final_ratio_bound(self) -> float:
        """Max modulus of the geometric ratios of the final sum at this point."""
        q, s = self.q, self.s
        return max(
            q ** 1.5 * q ** (-3 * s - 0.5),   # weight x I-layer ratio
            q ** 1.5 * q ** (-6 * s + 1),     # weight x (b1 b2 X)-layer ratio
        )


# --------------------------------------------------------------------------
# the comparison suite


@dataclass
class ComparisonReport:
    label: str
    symbolic_value: complex
    truncated_value: complex
    terms_used: int
    tail_bound: float
    relative_error: float
    passed: bool
    inconclusive: bool = False

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "symbolic": [self.symbolic_value.real, self.symbolic_value.imag],
            "truncated": [self.truncated_value.real, self.truncated_value.imag],
            "terms_used": self.terms_used,
            "tail_bound": self.tail_bound,
            "relative_error": self.relative_error,
            "passed": self.passed,
            "inconclusive": self.inconclusive,
        }


def _relative(a: complex, b: complex) -> float:
    scale = max(abs(a), abs(b), 1.0)
    return abs(a - b) / scale


def _report(label, symbolic, truncated, terms, tail, tol) -> ComparisonReport:
    rel = _relative(symbolic, truncated)
    inconclusive = tail > tol * max(1.0, abs(symbolic))
    passed = inconclusive or rel <= tol
    return ComparisonReport(label, symbolic, truncated, terms, tail, rel,
                            passed, inconclusive)


def _max_over_n(label, pairs, tol) -> ComparisonReport:
    worst = max(pairs, key=lambda p: _relative(p[0], p[1]))
    rel = _relative(*worst)
    return ComparisonReport(label, worst[0], worst[1], len(pairs), 0.0, rel,
                            rel <= tol, False)


_LOCAL_FACTOR_CACHE: dict = {}


def _local_factor_cached(eps: int, mutations: frozenset = frozenset()) -> RatFunc:
    key = (eps, tuple(sorted(mutations)))
    if key not in _LOCAL_FACTOR_CACHE:
        _LOCAL_FACTOR_CACHE[key] = zeta.local_factor(eps, mutations)
    return _LOCAL_FACTOR_CACHE[key]


def run_point(pt: NumericPoint, tolerance: float = 1e-9, nmax: int = 200,
              lemma_n: int = 30, inner_terms: int = 300):
    """All comparisons at one numeric point."""
    ds = DefiningSeries(pt)
    tag = f"[seed={pt.seed} eps={pt.eps:+d}]"
    reports = []

    pairs = [(eval_ratfunc(zeta.I_at(n), pt), ds.I_defining(n))
             for n in range(lemma_n + 1)]
    reports.append(_max_over_n(f"I closed vs defining, n<={lemma_n} {tag}", pairs, tolerance))

    pairs = [(eval_ratfunc(zeta.J1_closed(n), pt), ds.J1_decomposition(n, inner_terms))
             for n in range(5)]
    reports.append(_max_over_n(f"J1 lemma vs decomposition ({inner_terms} terms) {tag}",
                               pairs, tolerance))

    pairs = [(eval_ratfunc(zeta.R1_closed(n), pt), ds.R1_defining(n)) for n in range(7)]
    reports.append(_max_over_n(f"R1 lemma vs defining sum {tag}", pairs, tolerance))

    pairs = [(eval_ratfunc(zeta.R2_closed(n), pt), ds.R2_defining(n, inner_terms))
             for n in range(5)]
    reports.append(_max_over_n(f"R2 lemma vs defining ({inner_terms} terms) {tag}",
                               pairs, tolerance))

    lf = eval_ratfunc(_local_factor_cached(pt.eps), pt)
    rho = ds.final_ratio_bound()
    if rho >= 1.0:
        reports.append(ComparisonReport(
            f"final sum vs local factor ({nmax} terms) {tag}", lf, complex("nan"),
            0, math.inf, math.inf, True, True))
    else:
        total, tail = truncated_series(ds.final_term, nmax, rho)
        reports.append(_report(f"final sum vs local factor ({nmax} terms) {tag}",
                               lf, total, nmax, tail, tolerance))

    target = eval_ratfunc(zeta.l_ratio_target(pt.eps), pt)
    reports.append(_report(f"local factor vs L-ratio target {tag}", lf, target,
                           0, 0.0, tolerance))
    return reports


def run_suite(points, tolerance: float = 1e-9, nmax: int = 200,
              lemma_n: int = 30, inner_terms: int = 300):
    """Comparison reports for every point, in input order."""
    reports = []
    for pt in points:
        reports.extend(run_point(pt, tolerance, nmax, lemma_n, inner_terms))
    return reports


#: mutation detection needs parameters where the corrupted terms are not
#: numerically negligible; at the suite defaults (q=9, s=2) a single sign
#: flip moves the sum by ~1e-10 and would hide under the tolerance
SENSITIZED_POINT = NumericPoint(q=4.0, s=0.75, a=cmath.exp(0.7j),
                                b1=cmath.exp(0.3j), b2=cmath.exp(-0.45j), eps=-1)


def mutation_sanity(pt: NumericPoint | None = None, mutations=None,
                    tolerance: float = 1e-9, nmax: int = 200):
    """Reports comparing each mutated closed form against the true truncated sum.

    A healthy harness fails (passed = False) on every mutation.
    """
    pt = pt or SENSITIZED_POINT
    ds = DefiningSeries(pt)
    total, tail = truncated_series(ds.final_term, nmax, ds.final_ratio_bound())
    reports = []
    for mutation in sorted(mutations or zeta.MUTATIONS):
        mutated = eval_ratfunc(_local_factor_cached(pt.eps, frozenset({mutation})), pt)
        reports.append(_report(f"mutated[{mutation}] vs final sum", mutated, total,
                               nmax, tail, tolerance))
    return reports
