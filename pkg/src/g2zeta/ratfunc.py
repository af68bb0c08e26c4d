"""Exact multivariate Laurent arithmetic over the symbol ring of the computation.

Everything downstream works in the Laurent ring

    Q[H^{+-1}, Z^{+-1}, a^{+-1}, b1^{+-1}, b2^{+-1}, eps] / (eps^2 - 1)

with q^{1/2} = H (so q = H^2 and no fractional powers ever appear),
q^{-3s} = Z, Satake symbols a, b1, b2, and the quadratic-character sign eps.

A :class:`LaurentPoly` is a dict from exponent vectors to ``Fraction``
coefficients; the eps exponent is reduced mod 2 on every multiplication.
A :class:`RatFunc` is a numerator polynomial over a *factored* denominator:
a multiset of canonical factors, each normalized so its graded-lex-smallest
monomial is the constant 1 (units are folded into the numerator).  Keeping
denominators factored makes repeated addition cheap — the common denominator
is a factor-multiset lcm instead of a blind product — which is what keeps the
final cross-multiplication certificates small.  No gcd normalization is ever
attempted; equality is decided by cross-multiplication only.

:class:`ExpPoly` packages an exponential sum in an integer n,
``n -> sum_i coef_i * ratio_i^n`` valid from a threshold, with explicit
per-n overrides below the threshold.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

NVARS = 6
VAR_NAMES = ("H", "Z", "a", "b1", "b2", "eps")
_VAR_INDEX = {name: i for i, name in enumerate(VAR_NAMES)}
EPS_INDEX = 5
ZERO_EXP = (0,) * NVARS

#: hard bound on any single exponent; exceeding it is a bug, not a feature
#: (the deepest legitimate use, the n <= 30 oracle range, peaks at 66)
MAX_EXPONENT = 128


class ExponentOverflowError(OverflowError):
    """An exponent left the supported window |e| <= MAX_EXPONENT."""


class PoleError(ZeroDivisionError):
    """A geometric ratio hit 1, or a zero denominator was produced."""


def _exp_mul(e1, e2):
    out = [x + y for x, y in zip(e1, e2)]
    out[EPS_INDEX] &= 1
    for x in out:
        if x > MAX_EXPONENT or x < -MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {x} out of range in {out}")
    return tuple(out)


def _exp_inv(e):
    out = [-x for x in e]
    out[EPS_INDEX] = e[EPS_INDEX] & 1
    return tuple(out)


def _grlex(e):
    # eps is a torsion symbol, excluded from the grading
    return (sum(e[:EPS_INDEX]), e)


class LaurentPoly:
    """Immutable sparse Laurent polynomial. Do not mutate ``terms`` after init."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[e] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c) -> "LaurentPoly":
        c = Fraction(c)
        return cls({ZERO_EXP: c} if c else {})

    @classmethod
    def monomial(cls, coeff=1, **powers) -> "LaurentPoly":
        e = [0] * NVARS
        for name, p in powers.items():
            e[_VAR_INDEX[name]] = p
        e[EPS_INDEX] &= 1
        return cls({tuple(e): Fraction(coeff)})

    # -- ring operations ----------------------------------------------
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e, 0) + c
            if s:
                t[e] = s
            else:
                t.pop(e, None)
        return LaurentPoly(t)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _exp_mul(e1, e2)
                s = t.get(e, 0) + c1 * c2
                if s:
                    t[e] = s
                else:
                    t.pop(e, None)
        return LaurentPoly(t)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("LaurentPoly power must be >= 0; invert via RatFunc")
        out = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def scaled(self, c) -> "LaurentPoly":
        c = Fraction(c)
        if not c:
            return LaurentPoly()
        return LaurentPoly({e: v * c for e, v in self.terms.items()})

    def mono_times(self, exp: tuple, coeff=Fraction(1)) -> "LaurentPoly":
        return LaurentPoly({_exp_mul(e, exp): v * coeff for e, v in self.terms.items()})

    # -- structure ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def grlex_min_term(self):
        e = min(self.terms, key=_grlex)
        return e, self.terms[e]

    def specialize_eps(self, sign: int) -> "LaurentPoly":
        """Substitute eps = +-1."""
        if sign not in (1, -1):
            raise ValueError("eps specializes to +-1 only")
        t = {}
        for e, c in self.terms.items():
            if e[EPS_INDEX]:
                c = c * sign
            e2 = e[:EPS_INDEX] + (0,)
            s = t.get(e2, 0) + c
            if s:
                t[e2] = s
            else:
                t.pop(e2, None)
        return LaurentPoly(t)

    # -- canonical text -------------------------------------------------
    def to_text(self) -> str:
        """Canonical serialization: graded-lex-descending monomials, explicit exponents."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{VAR_NAMES[i]}^{e[i]}" for i in range(NVARS) if e[i]
            )
            if mono:
                parts.append(f"{c}*{mono}")
            else:
                parts.append(f"{c}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.to_text()})"


_ONE_POLY = LaurentPoly.constant(1)

# registry of canonical factors so factored denominators can hash cheaply
_FACTOR_REGISTRY: dict = {}


def _factor_key(p: LaurentPoly):
    k = frozenset(p.terms.items())
    _FACTOR_REGISTRY.setdefault(k, p)
    return k


def _factor_poly(key) -> LaurentPoly:
    return _FACTOR_REGISTRY[key]


def _normalize_factor(p: LaurentPoly):
    """Split p = coeff * monomial * canonical where canonical has grlex-min term 1."""
    e0, c0 = p.grlex_min_term()
    canon = p.mono_times(_exp_inv(e0), Fraction(1) / c0)
    return e0, c0, canon


class RatFunc:
    """numerator / product of canonical factors; equality by cross-multiplication."""

    __slots__ = ("num", "_factors")

    def __init__(self, num: LaurentPoly, factors: Mapping | None = None):
        self.num = num
        if num.is_zero() or not factors:
            self._factors = {}
        else:
            self._factors = {k: m for k, m in factors.items() if m}

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c) -> "RatFunc":
        return cls(LaurentPoly.constant(c))

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RatFunc":
        return cls(p)

    @classmethod
    def fraction(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        return cls(num) / cls(den)

    # -- accessors ---------------------------------------------------------
    @property
    def numerator(self) -> LaurentPoly:
        return self.num

    def denominator_factors(self):
        """List of (canonical LaurentPoly, multiplicity)."""
        return [(_factor_poly(k), m) for k, m in sorted(self._factors.items(), key=repr)]

    def den(self) -> LaurentPoly:
        """Expanded denominator."""
        out = _ONE_POLY
        for k, m in self._factors.items():
            out = out * (_factor_poly(k) ** m)
        return out

    def is_zero(self) -> bool:
        return self.num.is_zero()

    # -- arithmetic ----------------------------------------------------------
    def _cofactor(self, lcm) -> LaurentPoly:
        out = _ONE_POLY
        for k, m in lcm.items():
            d = m - self._factors.get(k, 0)
            if d:
                out = out * (_factor_poly(k) ** d)
        return out

    def __add__(self, other: "RatFunc") -> "RatFunc":
        lcm = dict(self._factors)
        for k, m in other._factors.items():
            if lcm.get(k, 0) < m:
                lcm[k] = m
        num = self.num * self._cofactor(lcm) + other.num * other._cofactor(lcm)
        return RatFunc(num, lcm)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self._factors)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        fac = dict(self._factors)
        for k, m in other._factors.items():
            fac[k] = fac.get(k, 0) + m
        return RatFunc(self.num * other.num, fac)

    def __rmul__(self, scalar) -> "RatFunc":
        return RatFunc(self.num.scaled(scalar), self._factors)

    def inv(self) -> "RatFunc":
        if self.num.is_zero():
            raise PoleError("inversion of zero")
        e0, c0, canon = _normalize_factor(self.num)
        num = LaurentPoly.constant(Fraction(1) / c0).mono_times(_exp_inv(e0))
        fac = {} if canon == _ONE_POLY else {_factor_key(canon): 1}
        out = RatFunc(num, fac)
        for k, m in self._factors.items():
            out = out * RatFunc(_factor_poly(k) ** m)
        return out

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return self * other.inv()

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return self.inv() ** (-n)
        out = RatFunc.constant(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # -- equality -------------------------------------------------------------
    def cross_residue(self, other: "RatFunc") -> LaurentPoly:
        """self.num * other.den - other.num * self.den; zero iff equal."""
        return self.num * other.den() - other.num * self.den()

    def eq(self, other: "RatFunc") -> bool:
        return self.cross_residue(other).is_zero()

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.eq(other)

    __hash__ = None  # semantic equality is not hash-compatible

    def specialize_eps(self, sign: int) -> "RatFunc":
        num = self.num.specialize_eps(sign)
        out = RatFunc(num)
        for k, m in self._factors.items():
            f = _factor_poly(k).specialize_eps(sign)
            if f.is_zero():
                raise PoleError("denominator factor vanished under eps specialization")
            out = out / RatFunc(f) ** m
        return out

    def to_text(self) -> str:
        den = self.den()
        if den == _ONE_POLY:
            return f"({self.num.to_text()})"
        return f"({self.num.to_text()}) / ({den.to_text()})"

    def __repr__(self):
        return f"RatFunc({self.to_text()})"


# -- ring constants and symbol helpers ------------------------------------

ZERO = RatFunc.constant(0)
ONE = RatFunc.constant(1)


def monomial(coeff=1, **powers) -> RatFunc:
    """RatFunc monomial, e.g. monomial(Z=2, H=4, b1=1, b2=1)."""
    return RatFunc(LaurentPoly.monomial(coeff, **powers))


H = monomial(H=1)
Z = monomial(Z=1)
A = monomial(a=1)
B1 = monomial(b1=1)
B2 = monomial(b2=1)
EPS = monomial(eps=1)


def geom_sum(coef: RatFunc, ratio: RatFunc, n0: int) -> RatFunc:
    """Formal sum over m >= n0 of coef * ratio^m, i.e. coef * ratio^n0 / (1 - ratio)."""
    one_minus = ONE - ratio
    if one_minus.is_zero():
        raise PoleError("geometric ratio equals 1")
    return coef * (ratio ** n0) / one_minus


class ExpPoly:
    """Exponential sum in n: overrides for n < threshold, generic terms above.

    Generic ratios are kept pairwise distinct: equal ratios are merged by
    summing coefficients at construction time.
    """

    __slots__ = ("generic", "threshold", "overrides")

    def __init__(self, generic: Iterable, threshold: int = 0,
                 overrides: Mapping[int, RatFunc] | None = None):
        merged: list = []
        for coef, ratio in generic:
            for i, (c0, r0) in enumerate(merged):
                if r0.eq(ratio):
                    merged[i] = (c0 + coef, r0)
                    break
            else:
                merged.append((coef, ratio))
        self.generic = tuple((c, r) for c, r in merged if not c.is_zero())
        self.threshold = threshold
        self.overrides = dict(overrides or {})
        if sorted(self.overrides) != list(range(threshold)):
            raise ValueError("overrides must cover exactly n = 0 .. threshold-1")

    def at(self, n: int) -> RatFunc:
        """Exact value at integer n >= 0."""
        if n < 0:
            raise ValueError("ExpPoly is defined for n >= 0")
        if n < self.threshold:
            return self.overrides[n]
        out = ZERO
        for coef, ratio in self.generic:
            out = out + coef * (ratio ** n)
        return out

    def __mul__(self, other: "ExpPoly") -> "ExpPoly":
        thr = max(self.threshold, other.threshold)
        generic = [(c1 * c2, r1 * r2)
                   for c1, r1 in self.generic for c2, r2 in other.generic]
        overrides = {n: self.at(n) * other.at(n) for n in range(thr)}
        return ExpPoly(generic, thr, overrides)

    def weighted_sum(self, t: RatFunc) -> RatFunc:
        """Exact sum over n >= 0 of self(n) * t^n."""
        out = ZERO
        for n in range(self.threshold):
            out = out + self.overrides[n] * (t ** n)
        for coef, ratio in self.generic:
            out = out + geom_sum(coef, ratio * t, self.threshold)
        return out
