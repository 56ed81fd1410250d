"""Indeterminacy lattice L of the Kreck-Stolz invariant and the Torelli groups.

For r = 8n + 5 write N_r = P(gamma_{1,l}) with l = -2n - 1.  The normal
B-structure N_r -> CP^oo x CP^oo x BSpin pulls back x, y, p1hat to
s, t, (2l - 2)s^2.  Its kernel in degree 4 is spanned by

    alpha = y^2 - xy + l x^2,    beta = p1hat + 2(1 - l) x^2,

and L is the row span of the characteristic numbers of (alpha^2,
alpha^2 + alpha*beta, beta^2) on the signature-zero bordism basis b1..b9.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .bordism import CHAR_COLUMNS, signature_zero_basis
from .gring import GradedElement, RingPresentation, make_pn_ring, polynomial_ring, substitute
from .intlat import FinAbGroup, IntMatrix, element_order, format_group, lattice_basis

# E(a g3 + b g2 + c g1) = [(a, 2b, 8c)]
G3_IMAGE = (1, 0, 0)
G2_IMAGE = (0, 2, 0)
G1_IMAGE = (0, 0, 8)

# monomial of H^8(B) behind each characteristic-row column
_COLUMN_MONOMIALS = {
    "p1x2": "x^2*p", "p1xy": "x*y*p", "p1y2": "y^2*p",
    "x4": "x^4", "x3y": "x^3*y", "x2y2": "x^2*y^2", "xy3": "x*y^3", "y4": "y^4",
    "p1p1": "p^2",
}


@lru_cache(maxsize=None)
def classifying_ring() -> RingPresentation:
    """H^*(CP^oo x CP^oo x BSpin) through degree 8; p stands for p1hat."""
    return polynomial_ring([("x", 2), ("y", 2), ("p", 4)], 8, name="H*(B)")


def alpha_beta(l: int) -> tuple[GradedElement, GradedElement]:
    ring = classifying_ring()
    alpha = ring.from_coeffs(4, (l, -1, 1, 0))
    beta = ring.from_coeffs(4, (2 * (1 - l), 0, 0, 1))
    return alpha, beta


def ghat_star(a: GradedElement, l: int) -> GradedElement:
    """Pull a class of H^*(B) back to H^*(P(gamma_{1,l}))."""
    target = make_pn_ring(1, l)
    s, t = target.gens()
    return substitute(a, {"x": s, "y": t, "p": s * s * (2 * l - 2)})


def char_columns(l: int) -> tuple[GradedElement, GradedElement, GradedElement]:
    alpha, beta = alpha_beta(l)
    a2 = alpha * alpha
    return a2, a2 + alpha * beta, beta * beta


def pair_with_row(cls: GradedElement, row: tuple[int, ...]) -> int:
    weights = {_COLUMN_MONOMIALS[name]: v for name, v in zip(CHAR_COLUMNS, row)}
    return cls.ring.pair(cls, weights)


def char_table(l: int) -> IntMatrix:
    """9x3 matrix: rows b1..b9, columns alpha^2, alpha^2 + alpha*beta, beta^2."""
    cols = char_columns(l)
    return IntMatrix([pair_with_row(c, row) for c in cols] for row in signature_zero_basis().values())


def lattice_L(l: int) -> IntMatrix:
    return lattice_basis(char_table(l))


def lattice_L_closed_form(l: int) -> IntMatrix:
    q = l * l - l
    return IntMatrix.diag([2, 2 * gcd(6, q), 8 * gcd(28, 4 * l - 4, q)])


@dataclass(frozen=True)
class TorelliResult:
    n: int
    group: FinAbGroup
    generator_orders: tuple[int, int]  # (order of g2, order of g1)

    @property
    def r(self) -> int:
        return 8 * self.n + 5

    def __str__(self) -> str:
        o2, o1 = self.generator_orders
        return format_group([f"Z_{o2}", f"Z_{o1}"])


def torelli_closed_form(n: int) -> tuple[int, int]:
    return 2 * gcd(3, 2 * n * n + 3 * n + 1), 2 * gcd(14, n + 1)


def torelli_group(n: int) -> TorelliResult:
    """Torelli group of N_{8n+5}, read off from generator orders in Z^3/L."""
    l = -2 * n - 1
    lat = lattice_L(l)
    orders = (element_order(G2_IMAGE, lat), element_order(G1_IMAGE, lat))
    expected = torelli_closed_form(n)
    if orders != expected:
        raise AssertionError(f"n={n}: orders in Z^3/L {orders} disagree with closed form {expected}")
    return TorelliResult(n, FinAbGroup.from_orders(orders), orders)


def milnor_torelli(k: int) -> FinAbGroup:
    """Torelli group of the generalized Milnor hypersurface M_k, k = 2m + 1."""
    if k < 1 or k % 2 == 0:
        raise ValueError(f"Torelli group of M_k is known only for odd k >= 1, got k={k}")
    m = (k - 1) // 2
    group = FinAbGroup.from_orders([6, gcd(28, m * m + m)])
    n, rem = divmod(-3 * k * k - 5, 8)
    assert rem == 0
    via_bundle = torelli_group(n).group
    if via_bundle != group:
        raise AssertionError(f"k={k}: {group} disagrees with Torelli group of N_{8 * n + 5}: {via_bundle}")
    return group


TABLE_COLUMNS = ("s1", "s1+s2", "s3")


def printed_char_table(l: int) -> IntMatrix:
    """The rows b1..b9 x (s1, s1+s2, s3) exactly as printed, as polynomials in l.

    The printed b2 entry in the middle column is +12; pairing alpha*beta with
    b2 (only <p1hat xy> = 12) gives -12, so this row disagrees with char_table.
    """
    return IntMatrix([
        [0, 24 * l, 96 * (1 - l)],
        [0, 12, 0],
        [0, 24, 0],
        [2 * l * l, 2 * l - 2 * l * l, 8 * (l * l - l)],
        [-2 * l, 0, 0],
        [4 * l + 2, 0, 0],
        [-2, 0, 0],
        [2, 0, 0],
        [0, 0, 224],
    ])
