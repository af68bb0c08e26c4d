"""The unramified formula layer: Shintani values, metaplectic Whittaker
values (checked in exact Gaussian-rational arithmetic on the unit circle),
the integral tables, and the formula-level Weil action."""
import random
from fractions import Fraction as F

import pytest

from g2zeta.localmodels import (FourierGen, HeisGen, NGen, SATAKE, TorusGen,
                                WeilState, additive_integral, apply_sequence,
                                bfh_whittaker, central_twist, gauss_unit,
                                initial_state, jacobi_mul, jacobi_pair_of,
                                shintani, state_of_jacobi_pair, val_p,
                                weil_apply)
from g2zeta.ratfunc import A, B1, B2, EPS, ONE, RatFunc, VAR_NAMES, ZERO, monomial
from g2zeta.words import UnsupportedGeneratorError


class TestShintani:
    def test_normalized_at_origin(self):
        assert shintani(0, 0).eq(ONE)

    def test_vanishes_for_negative_l(self):
        for k in range(4):
            assert shintani(k, -1).is_zero()
        assert shintani(0, -3).is_zero()

    def test_first_nontrivial_value(self):
        assert shintani(0, 1).eq(monomial(Z=1, H=-1) * (B1 + B2))

    def test_central_twist_values(self):
        assert central_twist(0).eq(ONE)
        assert central_twist(1).eq(monomial(Z=2, b1=1, b2=1))

    def test_central_twist_factorization(self):
        for k in range(7):
            for l in range(7):
                assert shintani(k, l).eq(central_twist(k) * shintani(0, l))


class QC:
    """Exact complex numbers with rational parts, for unit-circle checks."""

    def __init__(self, re, im=0):
        self.re, self.im = F(re), F(im)

    def __add__(self, o):
        return QC(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return QC(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        return QC(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def inv(self):
        n = self.re * self.re + self.im * self.im
        return QC(self.re / n, -self.im / n)

    def __truediv__(self, o):
        return self * o.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out = QC(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o):
        return self.re == o.re and self.im == o.im

    def __repr__(self):
        return f"QC({self.re},{self.im})"


def exact_eval(f: RatFunc, vals: dict) -> QC:
    def poly(p):
        total = QC(0)
        for e, c in p.terms.items():
            v = QC(c)
            for i, x in enumerate(e):
                if x:
                    v = v * (vals[VAR_NAMES[i]] ** x)
            total = total + v
        return total

    return poly(f.num) / poly(f.den())


class TestBfhWhittaker:
    # a = (1 - t^2 + 2it)/(1 + t^2) at t = 1/3 lies exactly on the unit circle
    A_VAL = QC(F(4, 5), F(3, 5))
    VALS = {"H": QC(3), "Z": QC(F(1, 7)), "a": A_VAL, "b1": QC(2), "b2": QC(F(1, 5))}

    def test_value_at_zero(self):
        value, mu_power = bfh_whittaker(0)
        assert mu_power == 0
        assert value.eq(ONE)

    def test_value_at_one(self):
        value, mu_power = bfh_whittaker(1)
        assert mu_power == 1
        assert value.eq(monomial(H=-2) * (A + A.inv() - EPS * monomial(H=-1)))

    def test_closed_form_exact_on_unit_circle(self):
        # q = 9, so q^{1/2} = 3 and the value is Gaussian-rational on |a| = 1
        q, rq_inv, a = F(9), F(1, 3), self.A_VAL
        for epsv, eps_sym in ((1, ONE), (-1, -ONE)):
            vals = dict(self.VALS)
            vals["eps"] = QC(epsv)
            for n in range(21):
                value, mu_power = bfh_whittaker(n, eps_sym)
                assert mu_power == n
                one = QC(1)
                direct = (QC(q ** -n)
                           * ((one - QC(epsv * rq_inv) * a.inv()) * a ** (n + 1)
                              - (one - QC(epsv * rq_inv) * a) * a ** -(n + 1))
                           / (a - a.inv()))
                assert exact_eval(value, vals) == direct

    def test_rejects_negative_n(self):
        with pytest.raises(ValueError):
            bfh_whittaker(-1)


class TestIntegralTables:
    def test_gauss_unit_cases(self):
        u = ONE - monomial(H=-2)
        for k in range(-5, 6):
            if k >= 0:
                assert gauss_unit(k).eq(u)
            elif k == -1:
                assert gauss_unit(k).eq(-monomial(H=-2))
            else:
                assert gauss_unit(k).is_zero()

    def test_additive_integral_cases(self):
        for k in range(-5, 6):
            assert additive_integral(k).eq(ONE if k >= 0 else ZERO)

    def test_shell_decomposition(self):
        # integral over |r| <= 1 equals the sum over valuation shells:
        # additive_integral(k) = sum_{j>=0} q^{-j} gauss_unit(k+j), truncated
        q = 9.0
        for k in range(-3, 4):
            lhs = 1.0 if k >= 0 else 0.0
            rhs = 0.0
            for j in range(0, 60):
                g = gauss_unit(k + j)
                gval = 0.0 if g.is_zero() else (
                    1 - 1 / q if (k + j) >= 0 else -1 / q)
                rhs += q ** (-j) * gval
            assert abs(lhs - rhs) <= 1e-10

    def test_satake_symbols(self):
        assert SATAKE.a.eq(A) and SATAKE.b1.eq(B1) and SATAKE.b2.eq(B2)
        assert SATAKE.eps.eq(EPS)


class TestWeilAction:
    def test_composite_torus_heisenberg(self):
        a, r1, r3 = F(5), F(2), F(7)
        state = apply_sequence([TorusGen(a), HeisGen(r1, F(0), r3)])
        assert state.mu_args == (a,)
        assert state.abs_half_args == (a,)
        assert state.phase == (r3, 0, 0)
        assert state.point_at(F(1)) == a + r1

    def test_n_zero_is_identity(self):
        s0 = initial_state()
        assert weil_apply(NGen(F(0)), s0) == s0

    def test_n_adds_quadratic_phase(self):
        s = weil_apply(NGen(F(3)), initial_state())
        assert s.phase == (0, 0, 3)
        assert s.phase_at(F(2)) == 12

    def test_heisenberg_additivity(self):
        r, rp = F(2), F(5)
        two = apply_sequence([HeisGen(r, F(0), F(0)), HeisGen(rp, F(0), F(0))])
        one = apply_sequence([HeisGen(r + rp, F(0), F(0))])
        assert two == one

    def test_heisenberg_law_via_states(self):
        h1, h2 = (F(1), F(2), F(3)), (F(-2), F(1), F(5))
        seq = apply_sequence([HeisGen(*h1), HeisGen(*h2)])
        pair = jacobi_mul(jacobi_pair_of(HeisGen(*h1)), jacobi_pair_of(HeisGen(*h2)))
        assert seq == state_of_jacobi_pair(pair)

    def test_formula_level_associativity(self):
        rng = random.Random(4)
        for _ in range(20):
            gens = []
            used_torus = False
            for _ in range(rng.randint(2, 4)):
                kind = rng.randrange(3)
                if kind == 0 and not used_torus:
                    gens.append(TorusGen(F(rng.randint(1, 5))))
                    used_torus = True
                elif kind == 1:
                    gens.append(NGen(F(rng.randint(-3, 3))))
                else:
                    gens.append(HeisGen(F(rng.randint(-3, 3)), F(rng.randint(-3, 3)),
                                        F(rng.randint(-3, 3))))
            state = apply_sequence(gens)
            pair = jacobi_pair_of(gens[0])
            for g in gens[1:]:
                pair = jacobi_mul(pair, jacobi_pair_of(g))
            assert state == state_of_jacobi_pair(pair)

    def test_fourier_marks_and_freezes(self):
        s = weil_apply(FourierGen(), initial_state())
        assert s.gamma_power == 1 and s.fourier
        with pytest.raises(UnsupportedGeneratorError):
            weil_apply(NGen(F(1)), s)

    def test_torus_requires_invertible(self):
        with pytest.raises(ZeroDivisionError):
            weil_apply(TorusGen(F(0)), initial_state())

    def test_support_cut(self):
        # with phi = char(o): val(a) >= 0 forces val(r1) >= 0 on the support
        p = 3
        rng = random.Random(8)
        for _ in range(30):
            a = F(rng.randint(1, 40))          # integral, val >= 0
            r1 = F(rng.randint(-40, 40) or 1, rng.choice((1, 3, 9)))
            state = apply_sequence([TorusGen(a), HeisGen(r1, F(0), F(0))])
            point = state.point_at(F(1))
            if val_p(r1, p) >= 0:
                assert val_p(point, p) >= 0
            else:
                assert val_p(point, p) == val_p(r1, p) < 0

    def test_val_p(self):
        assert val_p(F(9, 2), 3) == 2
        assert val_p(F(2, 27), 3) == -3
        assert val_p(F(0), 3) == float("inf")
