"""Unramified formula layer: Shintani values of the spherical Whittaker
function, the metaplectic Whittaker values, the two elementary p-adic
integral tables, and the formula-level Weil-representation action.

Conventions: q^{1/2} = H, q^{-3s} = Z, so the Shintani value at h(p^k, p^l)
is Z^{2k+l} (b1 b2)^k H^{-l} * (complete homogeneous polynomial of degree l
in b1, b2), and the quadratic character sign chi(p) is the symbol eps.

mu_psi is never evaluated: Whittaker values carry its argument exponent as an
integer side channel, and the assembly in :mod:`g2zeta.zeta` eliminates pairs
through mu_psi(p^n)^2 = eps^n.  The additive character psi likewise never
appears directly; the computation only sees it through the two integral
tables below, which are insensitive to unit scaling of the argument (p != 2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .ratfunc import A, B1, B2, EPS, ONE, RatFunc, ZERO, monomial
from .words import HeisenbergElement, UnsupportedGeneratorError

_Q_INV = monomial(H=-2)
_UNIT_VOLUME = ONE - _Q_INV  # vol(o^x) with vol(o) = 1


@dataclass(frozen=True)
class SatakeParams:
    """The free unramified symbols: metaplectic a, GL2 b1/b2, chi(p) = eps."""

    a: RatFunc = A
    b1: RatFunc = B1
    b2: RatFunc = B2
    eps: RatFunc = EPS


SATAKE = SatakeParams()


def shintani(k: int, l: int) -> RatFunc:
    """Spherical Whittaker value at h(p^k, p^l); zero for l < 0."""
    if l < 0:
        return ZERO
    sym = ZERO
    for i in range(l + 1):
        sym = sym + monomial(b1=l - i, b2=i)
    return monomial(Z=2 * k + l, b1=k, b2=k, H=-l) * sym


def central_twist(m: int) -> RatFunc:
    """Factor picked up by the central element h(p^m, 1) of the Levi of P'."""
    return monomial(Z=2 * m, b1=m, b2=m)


class WhittakerValue(NamedTuple):
    value: RatFunc
    mu_power: int


def bfh_whittaker(n: int, eps: RatFunc = EPS) -> WhittakerValue:
    """Metaplectic Whittaker value at t(p^n), with mu_psi(p^n) detached.

    value = q^{-n}/(a - a^{-1}) * ((1 - eps q^{-1/2} a^{-1}) a^{n+1}
                                   - (1 - eps q^{-1/2} a) a^{-(n+1)})
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    hi = monomial(H=-1)
    num = ((ONE - eps * hi * A.inv()) * (A ** (n + 1))
           - (ONE - eps * hi * A) * (A ** -(n + 1)))
    return WhittakerValue(monomial(H=-2 * n) * num / (A - A.inv()), n)


def gauss_unit(k: int) -> RatFunc:
    """Integral of psi(p^k u) over the units: 1 - 1/q, -1/q at k = -1, else 0."""
    if k >= 0:
        return _UNIT_VOLUME
    if k == -1:
        return -_Q_INV
    return ZERO


def additive_integral(k: int) -> RatFunc:
    """Integral of psi(p^k r) over the integers: 1 for k >= 0, else 0."""
    return ONE if k >= 0 else ZERO


# --------------------------------------------------------------------------
# formula-level Weil representation


@dataclass(frozen=True)
class NGen:
    b: object


@dataclass(frozen=True)
class TorusGen:
    a: object


@dataclass(frozen=True)
class HeisGen:
    r1: object
    r2: object
    r3: object


@dataclass(frozen=True)
class FourierGen:
    pass


@dataclass(frozen=True)
class WeilState:
    """The symbolic shape scale * psi(phase(x)) * phi(point(x)) of an operator
    product applied to the fixed test function phi = char(o).

    point is affine (c, d) meaning c*x + d; phase is (p0, p1, p2) meaning
    p0 + p1 x + p2 x^2.  The scale is tracked formally: mu_args collects
    mu_psi arguments, abs_half_args the |.|^{1/2} arguments, gamma_power the
    Weil-index units from the Fourier generator.  After a Fourier transform
    the point/phase bookkeeping stops (that branch is never used here).
    """

    point: tuple = (Fraction(1), Fraction(0))
    phase: tuple = (Fraction(0), Fraction(0), Fraction(0))
    mu_args: tuple = ()
    abs_half_args: tuple = ()
    gamma_power: int = 0
    fourier: bool = False

    def point_at(self, x):
        c, d = self.point
        return c * x + d

    def phase_at(self, x):
        p0, p1, p2 = self.phase
        return p0 + p1 * x + p2 * x * x

    def support_point(self):
        """The expression whose membership in the integers gates phi."""
        return self.point


def initial_state() -> WeilState:
    return WeilState()


def weil_apply(gen, state: WeilState) -> WeilState:
    """Extend the operator product by one generator acting first.

    Folding weil_apply left-to-right over g1, g2, ... builds the state of
    omega(g1) . omega(g2) . ... applied to phi, so the fold order matches the
    group-element order in expressions like omega(t(a) [r1, 0, r3]) phi.
    """
    if state.fourier:
        raise UnsupportedGeneratorError("state past a Fourier transform is not modeled")
    c, d = state.point
    p0, p1, p2 = state.phase
    if isinstance(gen, NGen):
        b = gen.b
        return WeilState((c, d), (p0 + b * d * d, p1 + 2 * b * c * d, p2 + b * c * c),
                         state.mu_args, state.abs_half_args, state.gamma_power)
    if isinstance(gen, TorusGen):
        a = gen.a
        if a == 0:
            raise ZeroDivisionError("torus argument must be invertible")
        if a == 1:
            return state  # mu_psi(1) = 1 and |1|^{1/2} = 1: t(1) acts trivially
        return WeilState((c * a, d * a), (p0, p1, p2),
                         state.mu_args + (a,), state.abs_half_args + (a,),
                         state.gamma_power)
    if isinstance(gen, HeisGen):
        r1, r2, r3 = gen.r1, gen.r2, gen.r3
        return WeilState((c, d + r1),
                         (p0 + r3 - 2 * d * r2 - r1 * r2, p1 - 2 * c * r2, p2),
                         state.mu_args, state.abs_half_args, state.gamma_power)
    if isinstance(gen, FourierGen):
        return WeilState(state.point, state.phase, state.mu_args,
                         state.abs_half_args, state.gamma_power + 1, True)
    raise UnsupportedGeneratorError(f"unknown Weil generator {gen!r}")


def apply_sequence(gens, state: WeilState | None = None) -> WeilState:
    out = state or initial_state()
    for gen in gens:
        out = weil_apply(gen, out)
    return out


# -- the Jacobi group B(SL2) x Heisenberg, for formula-level associativity ----


def sl2_n(b) -> tuple:
    return ((Fraction(1), Fraction(b)), (Fraction(0), Fraction(1)))


def sl2_t(a) -> tuple:
    a = Fraction(a)
    return ((a, Fraction(0)), (Fraction(0), 1 / a))


def sl2_mul(g1, g2) -> tuple:
    (a1, b1_), (c1, d1) = g1
    (a2, b2_), (c2, d2) = g2
    return ((a1 * a2 + b1_ * c2, a1 * b2_ + b1_ * d2),
            (c1 * a2 + d1 * c2, c1 * b2_ + d1 * d2))


SL2_ID = ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))


def heis_dot_g(h: HeisenbergElement, g) -> HeisenbergElement:
    """Right action (x, y, z).g = ((x, y) g, z)."""
    (a, b), (c, d) = g
    return HeisenbergElement(h.x * a + h.y * c, h.x * b + h.y * d, h.z)


def sl2_inv(g) -> tuple:
    (a, b), (c, d) = g
    return ((d, -b), (-c, a))


def sl2_star(g) -> tuple:
    """g* = d1 g d1^{-1} with d1 = diag(1, -1): flips the off-diagonal signs."""
    (a, b), (c, d) = g
    return ((a, -b), (-c, d))


def jacobi_mul(p1, p2):
    """(g1, h1)(g2, h2) = (g1 g2, (h1.g2*) h2).

    The operator formulas conjugate by omega(g)^{-1} omega(h) omega(g)
    = omega(h.g*) with the star twist g* = d1 g d1^{-1} (the same twist the
    projection homomorphism onto SL2 x Heisenberg carries), so products
    compose with the starred right action.
    """
    g1, h1 = p1
    g2, h2 = p2
    return (sl2_mul(g1, g2), heis_dot_g(h1, sl2_star(g2)) * h2)


def jacobi_pair_of(gen):
    zero = HeisenbergElement(Fraction(0), Fraction(0), Fraction(0))
    if isinstance(gen, NGen):
        return (sl2_n(gen.b), zero)
    if isinstance(gen, TorusGen):
        return (sl2_t(gen.a), zero)
    if isinstance(gen, HeisGen):
        return (SL2_ID, HeisenbergElement(gen.r1, gen.r2, gen.r3))
    raise UnsupportedGeneratorError("only n/t/heis live in the Jacobi group model")


def state_of_jacobi_pair(pair) -> WeilState:
    """Canonical state of (g, h) with g upper triangular: g = n(q p) t(p)."""
    (g, h) = pair
    (a, b), (c, d) = g
    if c != 0:
        raise UnsupportedGeneratorError("lower-triangular part is not modeled")
    gens = [NGen(b * a), TorusGen(a), HeisGen(h.x, h.y, h.z)]
    return apply_sequence(gens)


def val_p(x: Fraction, p: int) -> float:
    """p-adic valuation of a rational (inf for zero); test helper for support cuts."""
    if x == 0:
        return math.inf
    x = Fraction(x)
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v
