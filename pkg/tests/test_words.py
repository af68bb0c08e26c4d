"""The symbolic word engine against the matrix oracle: normal ordering, the
bracket notation, the Heisenberg projection, and torus/Weyl conjugation."""
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from g2zeta.adjoint import evaluate_word
from g2zeta.roots import ALPHA, BETA, POSITIVE_ROOTS, Root
from g2zeta.words import (GroupWord, HeisenbergElement, Htorus,
                          RewriteLimitError, UnsupportedGeneratorError, W, X,
                          conj, normal_order, pr, v_element, word, x_word)

AB = Root(1, 1)


def coords_of(w):
    got = {g: F(0) for g in POSITIVE_ROOTS}
    for gen in w.generators:
        got[gen.root] = gen.coeff
    return [got[g] for g in POSITIVE_ROOTS]


class TestNormalOrder:
    def test_beta_alpha_swap_at_one(self, basis):
        w = word(X(BETA, F(1)), X(ALPHA, F(1)))
        ordered = normal_order(w)
        # frozen from the matrix oracle, re-derived below
        assert coords_of(ordered) == [1, 1, 1, 1, -1, -1]
        m = basis.x(BETA, F(1)) * basis.x(ALPHA, F(1))
        assert list(basis.unipotent_coordinates(m)) == coords_of(ordered)

    def test_beta_alpha_swap_general(self, basis):
        x, y = F(3), F(2)
        ordered = normal_order(word(X(BETA, y), X(ALPHA, x)))
        assert coords_of(ordered) == [x, y, x * y, x * x * y, -x ** 3 * y, -x ** 3 * y * y]
        m = basis.x(BETA, y) * basis.x(ALPHA, x)
        assert list(basis.unipotent_coordinates(m)) == coords_of(ordered)

    def test_same_root_merges(self):
        ordered = normal_order(word(X(ALPHA, F(2)), X(ALPHA, F(3))))
        assert coords_of(ordered) == [5, 0, 0, 0, 0, 0]

    def test_commuting_pair_untouched(self):
        w = word(X(Root(3, 1), F(1)), X(Root(3, 2), F(1)))
        assert normal_order(w) == w

    def test_idempotent(self):
        w = word(X(Root(2, 1), F(2)), X(BETA, F(1)), X(ALPHA, F(-3)))
        once = normal_order(w)
        assert normal_order(once) == once

    def test_oracle_equivalence_random_words(self, basis):
        rng = random.Random(5)
        for _ in range(20):
            gens = tuple(
                X(POSITIVE_ROOTS[rng.randrange(6)], F(rng.randint(-3, 3), rng.randint(1, 2)))
                for _ in range(rng.randint(1, 6)))
            w = GroupWord(gens)
            assert evaluate_word(w, basis) == evaluate_word(normal_order(w), basis)

    def test_rejects_negative_roots(self):
        with pytest.raises(UnsupportedGeneratorError):
            normal_order(word(X(-ALPHA, F(1))))

    def test_rejects_torus_generators(self):
        with pytest.raises(UnsupportedGeneratorError):
            normal_order(word(Htorus(F(1), F(2))))

    def test_step_budget(self):
        w = word(X(BETA, F(1)), X(ALPHA, F(1)))
        with pytest.raises(RewriteLimitError):
            normal_order(w, max_steps=2)


class TestBracketNotation:
    def test_zero_is_identity(self):
        assert v_element(F(0), F(0), F(0), F(0), F(0)) == GroupWord(
            tuple(X(g, F(0)) for g in (ALPHA, AB, Root(2, 1), Root(3, 1), Root(3, 2))))
        assert coords_of(normal_order(v_element(*[F(0)] * 5))) == [0] * 6

    def test_single_slot(self):
        w = normal_order(v_element(F(1), F(0), F(0), F(0), F(0)))
        assert coords_of(w) == [1, 0, 0, 0, 0, 0]

    def test_product_recombines(self):
        prod = v_element(F(1), F(1), F(0), F(0), F(0)) * v_element(F(0), F(0), F(1), F(0), F(0))
        assert coords_of(normal_order(prod)) == [1, 0, 1, 1, 0, 0]


class TestHeisenbergProjection:
    def test_direct_formula(self):
        h = pr(v_element(F(1), F(1), F(1), F(0), F(0)))
        assert (h.x, h.y, h.z) == (1, 1, 0)

    def test_kernel_is_v1(self):
        rng = random.Random(1)
        for _ in range(10):
            r = [F(rng.randint(-3, 3)) for _ in range(5)]
            full = pr(v_element(*r))
            squashed = pr(v_element(r[0], r[1], r[2], F(0), F(0)))
            assert (full.x, full.y, full.z) == (squashed.x, squashed.y, squashed.z)
        h = pr(v_element(F(0), F(0), F(0), F(3), F(-2)))
        assert (h.x, h.y, h.z) == (0, 0, 0)

    def test_homomorphism(self):
        rng = random.Random(2)
        for _ in range(20):
            v1 = v_element(*[F(rng.randint(-3, 3)) for _ in range(5)])
            v2 = v_element(*[F(rng.randint(-3, 3)) for _ in range(5)])
            lhs = pr(v1 * v2)
            rhs = pr(v1) * pr(v2)
            assert (lhs.x, lhs.y, lhs.z) == (rhs.x, rhs.y, rhs.z)

    def test_rejects_beta(self):
        with pytest.raises(UnsupportedGeneratorError):
            pr(word(X(BETA, F(1))))

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(-4, 4), min_size=9, max_size=9))
    def test_heisenberg_group_law_associative(self, vals):
        a, b, c = (HeisenbergElement(*map(F, vals[i:i + 3])) for i in (0, 3, 6))
        lhs = (a * b) * c
        rhs = a * (b * c)
        assert (lhs.x, lhs.y, lhs.z) == (rhs.x, rhs.y, rhs.z)


def _inverse_conjugator(by):
    gens = []
    for g in reversed(by.generators):
        if isinstance(g, Htorus):
            gens.append(Htorus(1 / g.c1, 1 / g.c2))
        else:
            gens.append(W(g.root, not g.inverted))
    return GroupWord(tuple(gens))


class TestConjugation:
    def test_torus_rule_inverse_side(self):
        # the inverse-side torus relation: h^{-1} x_b(r) h = x_b(t1^{-1} t2 r)
        t1, t2, r = F(2), F(3), F(5)
        out = conj(x_word(BETA, r), word(Htorus(1 / t1, 1 / t2)))
        assert out.generators == (X(BETA, t2 / t1 * r),)

    def test_gamma_rule(self):
        gamma = word(W(BETA), W(ALPHA), W(BETA), W(ALPHA))
        out = conj(x_word(AB, F(7)), gamma)
        assert out.generators == (X(ALPHA, F(7)),)

    def test_identity_conjugator(self):
        w = x_word(ALPHA, F(4))
        assert conj(w, GroupWord(())) == w

    def test_against_matrix_oracle(self, basis):
        rng = random.Random(9)
        for _ in range(12):
            g = POSITIVE_ROOTS[rng.randrange(6)]
            r = F(rng.randint(-3, 3) or 1, rng.randint(1, 3))
            w = x_word(g, r)
            conjugators = []
            for _ in range(rng.randint(1, 3)):
                if rng.random() < 0.5:
                    conjugators.append(Htorus(F(rng.randint(1, 3)), F(rng.randint(1, 4))))
                else:
                    conjugators.append(W(rng.choice((ALPHA, BETA)), rng.random() < 0.3))
            by = GroupWord(tuple(conjugators))
            expected = evaluate_word(by, basis) * evaluate_word(w, basis) \
                * evaluate_word(_inverse_conjugator(by), basis)
            assert evaluate_word(conj(w, by), basis) == expected

    def test_rejects_x_in_conjugator(self):
        with pytest.raises(UnsupportedGeneratorError):
            conj(x_word(ALPHA, F(1)), x_word(BETA, F(1)))

    def test_rejects_non_x_word(self):
        with pytest.raises(UnsupportedGeneratorError):
            conj(word(W(ALPHA)), word(Htorus(F(2), F(2))))
