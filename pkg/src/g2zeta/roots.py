"""The G2 root system in simple-root coordinates, its Weyl group, and the
double-coset combinatorics of the two maximal parabolics.

A root m*alpha + n*beta is the integer pair (m, n); no Euclidean embedding is
used.  The inner product is fixed by (alpha,alpha)=2, (beta,beta)=6,
(alpha,beta)=-3, which reproduces <alpha,beta> = -1 and <beta,alpha> = -3.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class RootDomainError(ValueError):
    """Argument is required to be a G2 root but is not."""


@dataclass(frozen=True, order=True)
class Root:
    m: int
    n: int

    def __add__(self, other: "Root") -> "Root":
        return Root(self.m + other.m, self.n + other.n)

    def __sub__(self, other: "Root") -> "Root":
        return Root(self.m - other.m, self.n - other.n)

    def __neg__(self) -> "Root":
        return Root(-self.m, -self.n)

    def scale(self, k: int) -> "Root":
        return Root(k * self.m, k * self.n)

    def __repr__(self):
        return f"Root({self.m},{self.n})"


ALPHA = Root(1, 0)
BETA = Root(0, 1)

#: positive roots in height order (the fixed normal-order of the word engine)
POSITIVE_ROOTS = (
    ALPHA, BETA, Root(1, 1), Root(2, 1), Root(3, 1), Root(3, 2),
)
ALL_ROOTS = POSITIVE_ROOTS + tuple(-g for g in POSITIVE_ROOTS)
_ROOT_SET = frozenset(ALL_ROOTS)


def is_root(g: Root) -> bool:
    return g in _ROOT_SET


def inner(g1: Root, g2: Root) -> int:
    """Inner product extended bilinearly from the simple roots."""
    return 2 * g1.m * g2.m - 3 * (g1.m * g2.n + g2.m * g1.n) + 6 * g1.n * g2.n


def pairing(g1: Root, g2: Root) -> int:
    """<g1, g2> = 2 (g1, g2) / (g2, g2); integral for root arguments."""
    if not is_root(g2):
        raise RootDomainError(f"{g2} is not a root")
    num = 2 * inner(g1, g2)
    den = inner(g2, g2)
    q, r = divmod(num, den)
    if r:
        raise RootDomainError(f"pairing({g1},{g2}) is not integral")
    return q


def reflect(g1: Root, g2: Root) -> Root:
    """Reflection s_{g2}(g1) = g1 - <g1, g2> g2."""
    return g1 - g2.scale(pairing(g1, g2))


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element given by its 2x2 integer action on (m, n) coordinates.

    ``word`` is a reduced expression over {"a", "b"}; equality and hashing use
    the action only, because words are not unique.
    """

    action: tuple  # ((a11, a12), (a21, a22)) acting on column (m, n)
    word: tuple

    def __call__(self, g: Root) -> Root:
        (a11, a12), (a21, a22) = self.action
        return Root(a11 * g.m + a12 * g.n, a21 * g.m + a22 * g.n)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        (a11, a12), (a21, a22) = self.action
        (b11, b12), (b21, b22) = other.action
        act = ((a11 * b11 + a12 * b21, a11 * b12 + a12 * b22),
               (a21 * b11 + a22 * b21, a21 * b12 + a22 * b22))
        return WeylElement(act, self.word + other.word)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.action == other.action

    def __hash__(self):
        return hash(self.action)

    def length(self) -> int:
        return len(self.word)

    def __repr__(self):
        return "W(" + ("".join(self.word) or "1") + ")"


IDENTITY = WeylElement(((1, 0), (0, 1)), ())


def simple_reflection(g: Root) -> WeylElement:
    """s_alpha or s_beta as a WeylElement."""
    if g == ALPHA:
        return WeylElement(((-1, 3), (0, 1)), ("a",))
    if g == BETA:
        return WeylElement(((1, 0), (1, -1)), ("b",))
    raise RootDomainError("simple_reflection expects alpha or beta")


S_ALPHA = simple_reflection(ALPHA)
S_BETA = simple_reflection(BETA)


def weyl_group() -> tuple:
    """All 12 elements, found by breadth-first closure; words are reduced."""
    seen = {IDENTITY.action: IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for w in frontier:
            for s in (S_ALPHA, S_BETA):
                ws = w * s
                if ws.action not in seen:
                    seen[ws.action] = ws
                    nxt.append(ws)
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda w: (w.length(), w.word)))


# Weyl subgroups of the parabolic Levis: P' has U_alpha in its Levi, P has U_beta.
PARABOLIC_LEFT = frozenset({IDENTITY, S_ALPHA})   # W_{M'}
PARABOLIC_RIGHT = frozenset({IDENTITY, S_BETA})   # W_M

#: roots of P' = M'V' (Levi {+-alpha}, radical = other positives)
PPRIME_ROOTS = frozenset(
    {ALPHA, -ALPHA} | {g for g in POSITIVE_ROOTS if g != ALPHA}
)

#: roots of the unipotent radical V of P (all positives except beta)
V_ROOTS = tuple(g for g in POSITIVE_ROOTS if g != BETA)


def double_cosets(left: Iterable[WeylElement] = PARABOLIC_LEFT,
                  right: Iterable[WeylElement] = PARABOLIC_RIGHT):
    """Partition W into left\\W/right double cosets; each coset is a frozenset."""
    left, right = set(left), set(right)
    remaining = {w.action: w for w in weyl_group()}
    cosets = []
    while remaining:
        w = min(remaining.values(), key=lambda x: (x.length(), x.word))
        coset = frozenset(u * w * v for u in left for v in right)
        cosets.append(coset)
        for x in coset:
            remaining.pop(x.action, None)
    return cosets


def double_coset_reps(left: Iterable[WeylElement] = PARABOLIC_LEFT,
                      right: Iterable[WeylElement] = PARABOLIC_RIGHT):
    """Minimal-length representatives of {1,s_a}\\W/{1,s_b}, sorted by length.

    For the parabolic pair of the unfolding these are
    1, s_b s_a, and gamma = (s_b s_a)^2.
    """
    left, right = frozenset(left), frozenset(right)
    if left != PARABOLIC_LEFT or right != PARABOLIC_RIGHT:
        raise RootDomainError("expected the parabolic Weyl subgroups of P' and P")
    reps = []
    for coset in double_cosets(left, right):
        reps.append(min(coset, key=lambda w: (w.length(), w.word)))
    return sorted(reps, key=lambda w: (w.length(), w.word))


GAMMA_WORD = ("b", "a", "b", "a")  # gamma = w_b w_a w_b w_a


def gamma_element() -> WeylElement:
    return S_BETA * S_ALPHA * S_BETA * S_ALPHA


def stabilizer_data(delta: WeylElement):
    """For a double-coset representative delta, the roots of V that delta carries
    into P' and a descriptor of the Levi intersection delta^{-1} P' delta ∩ SL2.

    Returns (v_fixed_roots, levi) with levi in {"sl2", "borel", "torus"}.
    """
    if delta not in double_coset_reps():
        raise RootDomainError(f"{delta} is not one of the three representatives")
    v_fixed = tuple(g for g in V_ROOTS if delta(g) in PPRIME_ROOTS)
    up = delta(BETA) in PPRIME_ROOTS
    down = delta(-BETA) in PPRIME_ROOTS
    levi = "sl2" if (up and down) else ("borel" if up else "torus")
    return v_fixed, levi
