"""The unramified local-factor computation: exact closed forms and defining
sums for the integral pieces, assembly of the full n-sum, and certification
of the closed-form product identity.

Notation (all exact RatFunc monomials): X = Z H^3 = q^{-(3s-3/2)},
Y = Z^2 H^4 b1 b2 = q^{-6s+2} omega(p), and the n-th Whittaker layer decays
like W = Z H^{-1} = q^{-(3s+1/2)} per step.

The final sum multiplies three ingredients per n: the metaplectic Whittaker
value (with mu_psi(p^n) detached), the measure factor q^{5n/2} mu_psi(p^n)
from the Iwasawa reduction, and the inner integral J(n).  The two mu factors
fuse to eps^n, and the q^{-n} inside the Whittaker value cancels q^{5n/2}
down to a net q^{3n/2} in the collapsed weight.  Everything is packaged as
exponential sums in n and summed exactly by geometric series.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .localmodels import additive_integral, bfh_whittaker, gauss_unit, shintani
from .ratfunc import (A, B1, B2, EPS, ExpPoly, ONE, RatFunc, ZERO, geom_sum,
                      monomial)

X_MONO = monomial(Z=1, H=3)                 # q^{-(3s-3/2)}
Y_MONO = monomial(Z=2, H=4, b1=1, b2=1)     # q^{-6s+2} b1 b2
STEP = monomial(Z=1, H=-1)                  # q^{-(3s+1/2)}
Q_INV = monomial(H=-2)
UNIT_VOL = ONE - Q_INV

#: recognized single-sign mutations of the J(n) branch formulas
MUTATIONS = frozenset({"J0_plus_to_minus", "J_middle_sign", "J_tail_sign"})


def eps_value(eps) -> RatFunc:
    """Accept +1 / -1 / 'sym' (or an explicit RatFunc) for the chi(p) sign."""
    if isinstance(eps, RatFunc):
        return eps
    if eps in (1, "+1", "1"):
        return ONE
    if eps in (-1, "-1"):
        return -ONE
    if eps in (None, "sym", "eps"):
        return EPS
    raise ValueError(f"eps must be +1, -1 or 'sym', got {eps!r}")


def eps_label(eps) -> str:
    e = eps_value(eps)
    if e.eq(ONE):
        return "+1"
    if e.eq(-ONE):
        return "-1"
    return "sym"


# --------------------------------------------------------------------------
# I(n): the basic Whittaker integral


def I_defining(n: int) -> RatFunc:
    """Defining sum: W(h(1,p^n)) + sum_{m=1}^{n} (1-1/q) q^{(-6s+1)m} omega^m W(h(1,p^{n-m}))."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = shintani(0, n)
    for m in range(1, n + 1):
        out = out + UNIT_VOL * monomial(Z=2 * m, H=2 * m, b1=m, b2=m) * shintani(0, n - m)
    return out


@lru_cache(maxsize=1)
def I_closed_exppoly() -> ExpPoly:
    """The closed form as an exponential sum with ratios W b1, W b2, W b1 b2 X."""
    C = UNIT_VOL * B1 * B2 * X_MONO / ((ONE - B1 * X_MONO) * (ONE - B2 * X_MONO))
    d = (B1 - B2).inv()
    c1 = (B1 + C * (ONE - B1 * X_MONO)) * d
    c2 = -((B2 + C * (ONE - B2 * X_MONO)) * d)
    c3 = C * X_MONO
    return ExpPoly([
        (c1, STEP * B1),
        (c2, STEP * B2),
        (c3, STEP * B1 * B2 * X_MONO),
    ])


def I_at(n: int) -> RatFunc:
    """Pointwise value of the closed form."""
    return I_closed_exppoly().at(n)


# --------------------------------------------------------------------------
# J1, R1, R2, R, J


def J1_closed(n: int) -> RatFunc:
    """(1 - q^{-6s+1} b1 b2) / (1 - q^{-6s+2} b1 b2) * I(n)."""
    return (ONE - monomial(Z=2, H=2, b1=1, b2=1)) / (ONE - Y_MONO) * I_at(n)


def J1_defining(n: int) -> RatFunc:
    """I(n) + geometric tail over m >= 1 of (1-1/q) Y^m I(n)."""
    return I_at(n) * (ONE + geom_sum(UNIT_VOL, Y_MONO, 1))


def R1_closed(n: int) -> RatFunc:
    """0 for n <= 1; q^{-12s+3} omega^2 I(n-1) - q^{-6s(n+1)+n+2} omega^{n+1} for n >= 2."""
    if n <= 1:
        return ZERO
    return (monomial(Z=4, H=6, b1=2, b2=2) * I_at(n - 1)
            - monomial(Z=2 * (n + 1), H=2 * n + 4, b1=n + 1, b2=n + 1))


def R1_defining(n: int) -> RatFunc:
    """Defining form: the additive integral plus the unit-integral shell sum.

    The phases psi(-2 p^{n-2} r5) and psi(-2 p^{n-m-2} u) enter only through
    the integral tables, which are unit-scaling invariant since p != 2.
    """
    prefactor = monomial(Z=4, H=6, b1=2, b2=2)
    total = shintani(0, n - 1) * additive_integral(n - 2)
    for m in range(1, n + 3):  # terms beyond m = n - 1 vanish; kept to exercise the tables
        total = total + monomial(H=2 * m) * gauss_unit(n - m - 2) * shintani(m, n - m - 1)
    return prefactor * total


def R2_closed(n: int) -> RatFunc:
    """I(0) Y (-1/q + (1-1/q) Y/(1-Y)) at n = 0; I(n) (1-1/q) Y/(1-Y) for n >= 1."""
    if n == 0:
        return I_at(0) * Y_MONO * (-Q_INV + UNIT_VOL * Y_MONO / (ONE - Y_MONO))
    return I_at(n) * UNIT_VOL * Y_MONO / (ONE - Y_MONO)


def R2_defining(n: int) -> RatFunc:
    """I(n) * sum_{m>=1} Y^m gauss_unit(m+n-2), closed by a geometric tail."""
    head_len = 1 if n == 0 else 0  # only n = 0 sees the k = -1 unit integral
    head = ZERO
    for m in range(1, head_len + 1):
        head = head + (Y_MONO ** m) * gauss_unit(m + n - 2)
    tail = geom_sum(UNIT_VOL, Y_MONO, head_len + 1)
    return I_at(n) * (head + tail)


def R_parts(n: int) -> RatFunc:
    return R1_closed(n) + R2_closed(n)


def R_branch(n: int) -> RatFunc:
    """The combined three-branch closed form for R(n) = R1(n) + R2(n)."""
    if n == 0:
        return -(I_at(0) * monomial(Z=2, H=2, b1=1, b2=1)
                 * (ONE - monomial(Z=2, H=6, b1=1, b2=1)) / (ONE - Y_MONO))
    if n == 1:
        return I_at(1) * UNIT_VOL * Y_MONO / (ONE - Y_MONO)
    return (monomial(Z=4, H=6, b1=2, b2=2) * I_at(n - 1)
            - monomial(Z=2 * (n + 1), H=2 * n + 4, b1=n + 1, b2=n + 1)
            + I_at(n) * UNIT_VOL * Y_MONO / (ONE - Y_MONO))


def J2(n: int) -> RatFunc:
    """The |r3| > 1 part of J(n); collapses to -R(n) through the unit table."""
    return -R_parts(n)


def J_branch(n: int) -> RatFunc:
    """1 + Y at n = 0, I(1) at n = 1, I(n) - q^{-1} Y^2 I(n-1) + q^{-n} Y^{n+1} above."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return ONE + Y_MONO
    if n == 1:
        return I_at(1)
    # q^{-n} Y^{n+1} = Z^{2(n+1)} H^{2n+4} (b1 b2)^{n+1}, built directly to
    # keep intermediate exponents inside the supported window
    return (I_at(n) - Q_INV * Y_MONO * Y_MONO * I_at(n - 1)
            + monomial(Z=2 * (n + 1), H=2 * n + 4, b1=n + 1, b2=n + 1))


def J_exppoly(mutations: frozenset = frozenset()) -> ExpPoly:
    """J(n) as an exponential sum: overrides at n = 0, 1 and the n >= 2 branch.

    ``mutations`` may name deliberate single-sign corruptions (for the
    mutation-sanity harness); normal callers pass none.
    """
    unknown = set(mutations) - MUTATIONS
    if unknown:
        raise ValueError(f"unknown mutations {sorted(unknown)}")
    mid = Q_INV * Y_MONO * Y_MONO
    mid_sign = ONE if "J_middle_sign" in mutations else -ONE
    generic = []
    for coef, ratio in I_closed_exppoly().generic:
        generic.append((coef + mid_sign * mid * coef * ratio.inv(), ratio))
    tail_coef = Y_MONO if "J_tail_sign" not in mutations else -Y_MONO
    generic.append((tail_coef, Q_INV * Y_MONO))
    j0 = ONE - Y_MONO if "J0_plus_to_minus" in mutations else ONE + Y_MONO
    return ExpPoly(generic, threshold=2, overrides={0: j0, 1: I_at(1)})


# --------------------------------------------------------------------------
# the full local factor


def weight_exppoly(eps=EPS) -> ExpPoly:
    """bfh_whittaker(n).value * q^{5n/2} * eps^n as an exponential sum in n.

    The q^{5n/2} carries the measure factor; the paired mu_psi(p^n) from the
    measure and the Whittaker value have already been fused into eps^n, and
    the Whittaker q^{-n} cancels into the net ratio eps q^{3/2} a^{+-1}.
    """
    e = eps_value(eps)
    d = (A - A.inv()).inv()
    c_plus = (A - e * monomial(H=-1)) * d
    c_minus = -((A.inv() - e * monomial(H=-1)) * d)
    ratio = e * monomial(H=3)
    return ExpPoly([(c_plus, ratio * A), (c_minus, ratio * A.inv())])


def weight_at(n: int, eps=EPS) -> RatFunc:
    """Direct (non-ExpPoly) weight for cross-checks: value * q^{5n/2} * eps^n."""
    value, mu_power = bfh_whittaker(n, eps_value(eps))
    return value * monomial(H=5 * n) * (eps_value(eps) ** mu_power)


def local_factor(eps=EPS, mutations: frozenset = frozenset()) -> RatFunc:
    """The exact value of the local integral: sum over n >= 0 of
    bfh value * q^{5n/2} * eps^n * J(n), summed by geometric series."""
    product = weight_exppoly(eps) * J_exppoly(mutations)
    return product.weighted_sum(ONE)


def _euler(poly_args) -> RatFunc:
    """Product of (1 - monomial) factors given as keyword dicts."""
    out = ONE
    for kw in poly_args:
        out = out * (ONE - monomial(**kw))
    return out


def l_ratio_target(eps=EPS) -> RatFunc:
    """The closed-form L-factor ratio, built from shifted Euler factors.

    numerator L-functions (inverted, hence in our denominator):
      L(3s-1, pi x (chi ten tau)),  q^{-(3s-1)} = Z H^2   (degree 4)
      L(6s-5/2, pi ten (chi ten omega)), q^{-(6s-5/2)} = Z^2 H^5 (degree 2)
    denominator L-functions (inverted, hence in our numerator):
      L(3s-1/2, tau): q^{-(3s-1/2)} = Z H;  L(6s-2, omega): Z^2 H^4;
      L(9s-7/2, tau ten omega): Z^3 H^7.
    """
    e = eps_value(eps)
    num = _euler([
        dict(Z=1, H=1, b1=1), dict(Z=1, H=1, b2=1),
        dict(Z=2, H=4, b1=1, b2=1),
        dict(Z=3, H=7, b1=2, b2=1), dict(Z=3, H=7, b1=1, b2=2),
    ])
    den = ONE
    for apow in (1, -1):
        den = den * (ONE - e * monomial(a=apow, Z=2, H=5, b1=1, b2=1))
        for bkw in (dict(b1=1), dict(b2=1)):
            den = den * (ONE - e * monomial(a=apow, Z=1, H=2, **bkw))
    return num / den


def target_product_form(eps=EPS) -> RatFunc:
    """The same ratio assembled as one product in terms of X = Z H^3."""
    e = eps_value(eps)
    qinv = Q_INV
    qhalf_inv = monomial(H=-1)
    num = ((ONE - B1 * qinv * X_MONO) * (ONE - B2 * qinv * X_MONO)
           * (ONE - B1 * B2 * qinv * X_MONO ** 2)
           * (ONE - B1 ** 2 * B2 * qinv * X_MONO ** 3)
           * (ONE - B1 * B2 ** 2 * qinv * X_MONO ** 3))
    den = ((ONE - e * A.inv() * B1 * B2 * qhalf_inv * X_MONO ** 2)
           * (ONE - e * A * B1 * B2 * qhalf_inv * X_MONO ** 2))
    for b in (B1, B2):
        den = den * (ONE - e * A.inv() * b * qhalf_inv * X_MONO)
        den = den * (ONE - e * A * b * qhalf_inv * X_MONO)
    return num / den


@dataclass
class LocalFactorReport:
    eps: str
    computed: RatFunc
    target: RatFunc
    equal: bool
    witness: str = ""


def verify_main_identity(eps=EPS, mutations: frozenset = frozenset()) -> LocalFactorReport:
    """Certify local_factor == l_ratio_target by cross-multiplication."""
    computed = local_factor(eps, mutations)
    target = l_ratio_target(eps)
    residue = computed.cross_residue(target)
    equal = residue.is_zero()
    witness = "" if equal else residue.to_text()
    return LocalFactorReport(eps_label(eps), computed, target, equal, witness)
