"""Symbolic Chevalley words: normal ordering by the commutator table,
torus/Weyl conjugation, the V-bracket notation and the Heisenberg projection.

Words are sequences of three kinds of generators over an abstract coefficient
field (exact rationals for matrix-oracle checks, RatFunc for symbolic work):
``X(root, coeff)``, ``Htorus(c1, c2)`` and ``W(root)`` (a fixed Weyl
representative w_root(+-1)).  Coefficients may also be parameter names
(strings) to be substituted later with :func:`assign`.

The rewrite engine orders products of positive root groups into the fixed
order alpha, beta, a+b, 2a+b, 3a+b, 3a+2b using the five commutator
relations; every swap pushes corrections into strictly higher roots, so the
process terminates, but a step budget guards against sign-convention bugs.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .roots import ALPHA, BETA, POSITIVE_ROOTS, Root, pairing, reflect

V_ROOT_ORDER = (ALPHA, Root(1, 1), Root(2, 1), Root(3, 1), Root(3, 2))
_POSITION = {g: i for i, g in enumerate(POSITIVE_ROOTS)}


class UnsupportedGeneratorError(ValueError):
    """The operation does not support this generator kind or root."""


class RewriteLimitError(RuntimeError):
    """Normal ordering exceeded its step budget (likely a table bug)."""


class UnassignedParameterError(ValueError):
    """A named word parameter had no value in the assignment."""


@dataclass(frozen=True)
class X:
    root: Root
    coeff: object


@dataclass(frozen=True)
class Htorus:
    c1: object
    c2: object


@dataclass(frozen=True)
class W:
    root: Root
    inverted: bool = False


@dataclass(frozen=True)
class GroupWord:
    generators: tuple

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.generators + other.generators)

    def __len__(self):
        return len(self.generators)


IDENTITY_WORD = GroupWord(())


def word(*gens) -> GroupWord:
    return GroupWord(tuple(gens))


def x_word(root: Root, coeff) -> GroupWord:
    return GroupWord((X(root, coeff),))


def v_element(r1, r2, r3, r4, r5) -> GroupWord:
    """[r1,...,r5] in the root order alpha, a+b, 2a+b, 3a+b, 3a+2b."""
    return GroupWord(tuple(X(g, c) for g, c in zip(V_ROOT_ORDER, (r1, r2, r3, r4, r5))))


#: [x_g(x), x_d(y)] = product of x_root(coeff(x,y)) in this fixed order,
#: with the convention [g1, g2] = g1^{-1} g2^{-1} g1 g2
COMMUTATOR_TABLE = {
    (ALPHA, BETA): (
        (Root(1, 1), lambda x, y: -(x * y)),
        (Root(2, 1), lambda x, y: -(x * x * y)),
        (Root(3, 1), lambda x, y: x * x * x * y),
        (Root(3, 2), lambda x, y: -2 * (x * x * x * y * y)),
    ),
    (ALPHA, Root(1, 1)): (
        (Root(2, 1), lambda x, y: -2 * (x * y)),
        (Root(3, 1), lambda x, y: 3 * (x * x * y)),
        (Root(3, 2), lambda x, y: 3 * (x * y * y)),
    ),
    (ALPHA, Root(2, 1)): ((Root(3, 1), lambda x, y: 3 * (x * y)),),
    (BETA, Root(3, 1)): ((Root(3, 2), lambda x, y: x * y),),
    (Root(1, 1), Root(2, 1)): ((Root(3, 2), lambda x, y: 3 * (x * y)),),
}

#: positive pairs (in order) whose root groups commute
TRIVIAL_PAIRS = tuple(
    (g, d)
    for i, g in enumerate(POSITIVE_ROOTS) for d in POSITIVE_ROOTS[i + 1:]
    if (g, d) not in COMMUTATOR_TABLE
)


def _is_zero(c) -> bool:
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0


def _field_inv(c):
    if hasattr(c, "inv"):
        return c.inv()
    return 1 / Fraction(c)


def _field_pow(c, k: int):
    if k >= 0:
        out = None
        for _ in range(k):
            out = c if out is None else out * c
        if out is None:
            # multiplicative identity of the field of c
            return c * _field_inv(c) if not _is_zero(c) else 1
        return out
    return _field_pow(_field_inv(c), -k)


def normal_order(w: GroupWord, max_steps: int = 20000) -> GroupWord:
    """Unique ordered form of a word in positive root groups.

    Applies the commutator table as rewrite rules until the generators appear
    in the fixed root order with at most one generator per root.
    """
    items = []
    for gen in w.generators:
        if not isinstance(gen, X):
            raise UnsupportedGeneratorError("normal_order expects X generators only")
        if gen.root not in _POSITION:
            raise UnsupportedGeneratorError(f"{gen.root} is not a positive root")
        items.append((gen.root, gen.coeff))

    steps = 0
    i = 0
    while i < len(items):
        steps += 1
        if steps > max_steps:
            raise RewriteLimitError(f"normal ordering exceeded {max_steps} steps")
        if _is_zero(items[i][1]):
            del items[i]
            i = max(i - 1, 0)
            continue
        if i + 1 >= len(items):
            break
        (g, cx), (d, cy) = items[i], items[i + 1]
        if g == d:
            items[i:i + 2] = [(g, cx + cy)]
            i = max(i - 1, 0)
            continue
        if _POSITION[g] < _POSITION[d]:
            i += 1
            continue
        # swap: x_g(cx) x_d(cy) -> x_d(cy) x_g(cx) [x_g(cx), x_d(cy)]
        # with (d, g) the table-ordered pair; the commutator of the out-of-order
        # product is the inverse of the table entry: reversed, negated.
        correction = []
        if (d, g) in COMMUTATOR_TABLE:
            for root, coeff in reversed(COMMUTATOR_TABLE[(d, g)]):
                correction.append((root, -coeff(cy, cx)))
        items[i:i + 2] = [(d, cy), (g, cx)] + correction
        i = max(i - 1, 0)
    return GroupWord(tuple(X(g, c) for g, c in items))


@dataclass(frozen=True)
class HeisenbergElement:
    """(x, y, z) with law (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2-x1 y2+y1 x2)."""

    x: object
    y: object
    z: object

    def __mul__(self, other: "HeisenbergElement") -> "HeisenbergElement":
        return HeisenbergElement(
            self.x + other.x,
            self.y + other.y,
            self.z + other.z - self.x * other.y + self.y * other.x,
        )


def pr(v: GroupWord, max_steps: int = 20000) -> HeisenbergElement:
    """Projection V -> Heisenberg, [r1..r5] -> (r1, r2, r3 - r1 r2).

    The kernel is the span of the two highest root groups.
    """
    for gen in v.generators:
        if not isinstance(gen, X) or gen.root not in V_ROOT_ORDER:
            raise UnsupportedGeneratorError("pr expects a word in V's root spaces")
    ordered = normal_order(v, max_steps)
    coeffs = {g: c for g, c in ((gen.root, gen.coeff) for gen in ordered.generators)}
    zero = None
    for gen in v.generators:
        zero = gen.coeff - gen.coeff
        break
    if zero is None:
        zero = Fraction(0)
    r1 = coeffs.get(ALPHA, zero)
    r2 = coeffs.get(Root(1, 1), zero)
    r3 = coeffs.get(Root(2, 1), zero)
    return HeisenbergElement(r1, r2, r3 - r1 * r2)


def torus_character(g: Root, c1, c2):
    """chi_g(h(c1,c2)) with h x_g(r) h^{-1} = x_g(chi_g r)."""
    return _field_pow(c1 * c2, pairing(g, ALPHA)) * _field_pow(c1 * c1 * c2, pairing(g, BETA))


def assign(w: GroupWord, values: Mapping[str, object]) -> GroupWord:
    """Substitute named parameters; raises if a name is missing."""
    def resolve(c):
        if isinstance(c, str):
            if c not in values:
                raise UnassignedParameterError(f"parameter {c!r} not assigned")
            return values[c]
        return c

    gens = []
    for gen in w.generators:
        if isinstance(gen, X):
            gens.append(X(gen.root, resolve(gen.coeff)))
        elif isinstance(gen, Htorus):
            gens.append(Htorus(resolve(gen.c1), resolve(gen.c2)))
        else:
            gens.append(gen)
    return GroupWord(tuple(gens))


def conj(w: GroupWord, by: GroupWord, signs: Mapping | None = None) -> GroupWord:
    """by * w * by^{-1} for a word w of X generators and a torus/Weyl conjugator.

    Torus generators scale coefficients by the root characters; Weyl
    generators permute roots with the +-1 table extracted from the calibrated
    matrix model (overridable via ``signs``).
    """
    for gen in w.generators:
        if not isinstance(gen, X):
            raise UnsupportedGeneratorError("conj expects the word to use X generators only")
    for gen in by.generators:
        if isinstance(gen, X):
            raise UnsupportedGeneratorError("conjugator must be a torus/Weyl word")
    if signs is None and any(isinstance(g, W) for g in by.generators):
        from .adjoint import default_weyl_signs
        signs = default_weyl_signs()

    gens = list(w.generators)
    for conjugator in reversed(by.generators):
        if isinstance(conjugator, Htorus):
            gens = [X(g.root, torus_character(g.root, conjugator.c1, conjugator.c2) * g.coeff)
                    for g in gens]
        else:
            new = []
            for g in gens:
                target = reflect(g.root, conjugator.root)
                if conjugator.inverted:
                    sign = signs[(conjugator.root, target)]
                else:
                    sign = signs[(conjugator.root, g.root)]
                new.append(X(target, sign * g.coeff if sign != 1 else g.coeff))
            gens = new
    return GroupWord(tuple(gens))
