"""The exact-arithmetic kernel: ring axioms, cross-multiplication equality,
eps reduction, geometric sums, and the exponential-sum calculus."""
import pytest
from hypothesis import given, settings, strategies as st

from g2zeta.oracle import NumericPoint, eval_ratfunc
from g2zeta.ratfunc import (B1, B2, EPS, ExpPoly, ExponentOverflowError, H,
                            LaurentPoly, ONE, PoleError, RatFunc, Z, ZERO,
                            geom_sum, monomial)

Y = monomial(Z=2, H=4, b1=1, b2=1)


def small_polys():
    coeff = st.integers(-3, 3)
    exp = st.integers(-2, 2)
    term = st.tuples(exp, exp, exp, st.integers(0, 1)).map(
        lambda t: (t[0], t[1], 0, t[2], 0, t[3]))
    return st.dictionaries(term, coeff, max_size=4).map(LaurentPoly)


class TestLaurentPoly:
    def test_difference_of_squares(self):
        lhs = RatFunc.fraction((B1 * B1 - B2 * B2).num, (B1 - B2).num)
        assert lhs.eq(B1 + B2)

    def test_add_zero(self):
        f = monomial(H=2, b1=1) + monomial(Z=-1)
        assert (f + ZERO).eq(f)

    def test_unit_inverse(self):
        one_minus_y = ONE - Y
        assert (one_minus_y * one_minus_y.inv()).eq(ONE)

    @settings(max_examples=60, deadline=None)
    @given(small_polys(), small_polys(), small_polys())
    def test_ring_axioms(self, p, q, r):
        assert (p + q) * r == p * r + q * r
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p + q == q + p

    @settings(max_examples=40, deadline=None)
    @given(small_polys(), small_polys())
    def test_eps_square_reduces(self, p, q):
        eps = LaurentPoly.monomial(eps=1)
        assert (eps * p) * (eps * q) == p * q

    def test_eps_specialization(self):
        f = ONE + EPS * monomial(H=1)
        g = ONE - EPS * monomial(Z=1)
        assert (f * g).specialize_eps(-1).eq(f.specialize_eps(-1) * g.specialize_eps(-1))

    def test_exponent_overflow_detected(self):
        with pytest.raises(ExponentOverflowError):
            _ = monomial(Z=100) * monomial(Z=100)

    def test_to_text_canonical(self):
        f = monomial(H=1, b1=2) + monomial(Z=-1) + ONE
        assert f.num.to_text() == "1*H^1*b1^2 + 1 + 1*Z^-1"


class TestCrossMultiplicationEquality:
    def _random_fracs(self):
        num = LaurentPoly.monomial(1, H=1) + LaurentPoly.monomial(-2, b1=1)
        den = LaurentPoly.monomial(1) + LaurentPoly.monomial(3, Z=1)
        f = RatFunc.fraction(num, den)
        scale = LaurentPoly.monomial(2, b2=1) + LaurentPoly.monomial(1)
        g = RatFunc.fraction(num * scale, den * scale)
        h = RatFunc.fraction(num * num, den * num)
        return f, g, h

    def test_equivalence_relation(self):
        f, g, h = self._random_fracs()
        assert f.eq(f) and g.eq(g)
        assert f.eq(g) and g.eq(f)
        assert g.eq(h) and f.eq(h)  # transitivity through g

    def test_inequality(self):
        assert not (B1 + B2).eq(B1 * B2)
        assert not ONE.eq(ZERO)


class TestGeomSum:
    def test_basic(self):
        assert geom_sum(ONE, Z, 1).eq(Z / (ONE - Z))

    def test_unit_tail_factor(self):
        u = ONE - monomial(H=-2)
        assert geom_sum(u, Y, 1).eq(u * Y / (ONE - Y))

    def test_shift_identity(self):
        c = ONE + monomial(b1=1)
        r = monomial(Z=1, H=2)
        lhs = geom_sum(c, r, 2) - c * r ** 2
        assert lhs.eq(geom_sum(c * r, r, 2))

    def test_pole(self):
        with pytest.raises(PoleError):
            geom_sum(ONE, ONE, 0)

    def test_inv_zero(self):
        with pytest.raises(PoleError):
            ZERO.inv()

    def test_numeric_against_partial_sum(self):
        pt = NumericPoint(q=9.0, s=2.0, a=1j, b1=complex(0.6, 0.8), b2=1.0, eps=1)
        u = ONE - monomial(H=-2)
        closed = eval_ratfunc(geom_sum(u, Y, 1), pt)
        uval = eval_ratfunc(u, pt)
        yval = eval_ratfunc(Y, pt)
        partial = sum(uval * yval ** m for m in range(1, 201))
        assert abs(closed - partial) <= 1e-10 * max(1.0, abs(closed))


class TestExpPoly:
    def test_constant(self):
        f = ExpPoly([(ONE, ONE)])
        assert f.at(5).eq(ONE)

    def test_negative_index(self):
        with pytest.raises(ValueError):
            ExpPoly([(ONE, Z)]).at(-1)

    def test_override_coverage_enforced(self):
        with pytest.raises(ValueError):
            ExpPoly([(ONE, Z)], threshold=2, overrides={0: ONE})

    def test_merges_equal_ratios(self):
        f = ExpPoly([(ONE, Z), (ONE, monomial(Z=1))])
        assert len(f.generic) == 1
        assert f.at(3).eq(2 * (Z ** 3))

    def test_weighted_sum_geometric(self):
        f = ExpPoly([(ONE, ONE)])
        assert f.weighted_sum(Z).eq(ONE / (ONE - Z))

    def test_weighted_sum_shifted(self):
        r = monomial(H=2, b1=1)
        f = ExpPoly([(ONE, r)], threshold=1, overrides={0: ZERO})
        t = monomial(Z=1)
        assert f.weighted_sum(t).eq(r * t / (ONE - r * t))

    def test_weighted_sum_pole(self):
        f = ExpPoly([(ONE, Z)])
        with pytest.raises(PoleError):
            f.weighted_sum(Z.inv())

    def test_product_and_numeric_truncation(self):
        f = ExpPoly([(ONE, monomial(Z=1, b1=1)), (monomial(H=-1), monomial(Z=1, b2=1))],
                    threshold=1, overrides={0: 2 * ONE})
        g = ExpPoly([(monomial(b2=1), monomial(Z=1, H=1))])
        h = f * g
        pt = NumericPoint(q=9.0, s=2.0, a=1j, b1=complex(0.28, 0.96),
                          b2=complex(-0.6, 0.8), eps=-1)
        closed = eval_ratfunc(h.weighted_sum(ONE), pt)
        coefs = [(eval_ratfunc(c, pt), eval_ratfunc(r, pt)) for c, r in h.generic]
        truncated = sum(eval_ratfunc(h.overrides[n], pt) for n in range(h.threshold))
        truncated += sum(c * r ** n for c, r in coefs
                         for n in range(h.threshold, 300))
        assert abs(closed - truncated) <= 1e-9 * max(1.0, abs(closed))
