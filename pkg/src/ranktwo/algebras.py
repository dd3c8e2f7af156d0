"""Rank-two algebra data: colors, Cartan matrices, simple roots, weights.

The two colors correspond to the two simple roots; alpha is always the
short one.  Weights live in fundamental-weight coordinates, so a weight is
just an integer pair (m_alpha, m_beta) and the simple roots are the rows
of the Cartan matrix.
"""

from __future__ import annotations

import enum
from fractions import Fraction


class Color(enum.Enum):
    ALPHA = "a"
    BETA = "b"

    def __lt__(self, other: "Color") -> bool:
        # alpha < beta, fixed for canonical serialization
        return self is Color.ALPHA and other is Color.BETA

    def swapped(self) -> "Color":
        return Color.BETA if self is Color.ALPHA else Color.ALPHA

    def __repr__(self) -> str:
        return f"Color.{self.name}"


ALPHA = Color.ALPHA
BETA = Color.BETA

SWAP = {ALPHA: BETA, BETA: ALPHA}
IDENTITY = {ALPHA: ALPHA, BETA: BETA}

Weight = tuple[int, int]


class Algebra(enum.Enum):
    A1A1 = "a1a1"
    A2 = "a2"
    C2 = "c2"
    G2 = "g2"

    @property
    def is_simple(self) -> bool:
        return self is not Algebra.A1A1

    def __repr__(self) -> str:
        return f"Algebra.{self.name}"


# Cartan matrices; row ALPHA first, row BETA second.
CARTAN: dict[Algebra, tuple[Weight, Weight]] = {
    Algebra.A1A1: ((2, 0), (0, 2)),
    Algebra.A2: ((2, -1), (-1, 2)),
    Algebra.C2: ((2, -1), (-2, 2)),
    Algebra.G2: ((2, -1), (-3, 2)),
}


def cartan_matrix(algebra: Algebra) -> tuple[Weight, Weight]:
    return CARTAN[algebra]


def simple_root(algebra: Algebra, color: Color) -> Weight:
    rows = CARTAN[algebra]
    return rows[0] if color is ALPHA else rows[1]


# Positive roots in fundamental-weight coordinates.
POSITIVE_ROOTS: dict[Algebra, tuple[Weight, ...]] = {
    Algebra.A1A1: ((2, 0), (0, 2)),
    Algebra.A2: ((2, -1), (-1, 2), (1, 1)),
    Algebra.C2: ((2, -1), (-2, 2), (0, 1), (2, 0)),
    Algebra.G2: ((2, -1), (-3, 2), (-1, 1), (1, 0), (3, -1), (0, 1)),
}

# Dynkin-diagram symmetry induced by the longest Weyl element: only the
# A2 diagram has a nontrivial one among the rank-two cases.
def sigma0(algebra: Algebra) -> dict[Color, Color]:
    return SWAP if algebra is Algebra.A2 else IDENTITY


def lowest_weight(algebra: Algebra, lam: Weight) -> Weight:
    """Weight of the minimal element, -w0(lam)."""
    a, b = lam
    if algebra is Algebra.A2:
        return (-b, -a)
    return (-a, -b)


def rho_check_pairing(algebra: Algebra, mu: Weight) -> Fraction:
    """<mu, rho^vee>: the coefficient sum when mu is written in simple roots."""
    (p, q) = mu
    (a, b), (c, d) = CARTAN[algebra]
    det = a * d - b * c
    # mu = x*alpha + y*beta  =>  (x, y) = mu . inverse(CARTAN)
    x = Fraction(p * d - q * c, det)
    y = Fraction(-p * b + q * a, det)
    return x + y


def parse_algebra(text: str) -> Algebra:
    try:
        return Algebra(text.lower())
    except ValueError:
        raise ValueError(f"unknown algebra {text!r}; expected one of a1a1, a2, c2, g2")
