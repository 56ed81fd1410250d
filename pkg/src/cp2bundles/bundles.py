"""Classification data for S^2-bundles over CP^2 and their characteristic classes.

A rank-2 complex bundle gamma_{k,l} over CP^2 has total Chern class
1 + kx + lx^2.  Its associated real 3-plane bundle has p1 = (k^2 - 4l)x^2, and
r = k^2 - 4l classifies the sphere bundle N_r; r always lies in 4Z + {0, 1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gring import GradedElement, make_pn_ring


class NotRealizableError(ValueError):
    """r is not the p1 of any real 3-plane bundle over CP^2."""


@dataclass(frozen=True)
class BundleParams:
    k: int
    l: int

    @property
    def r(self) -> int:
        return r_of(self)

    def ring(self):
        return make_pn_ring(self.k, self.l)


@dataclass(frozen=True)
class HomotopyFacts:
    pi3: str
    pi4: str
    pi5_description: str
    pi6: str


# Recorded for r = 8n + 5, where the pullback of xi_r along the Hopf map is nontrivial.
_HOMOTOPY_FACTS = HomotopyFacts(
    pi3="Z",
    pi4="0",
    pi5_description="injects into pi_5(CP^2) with image 2*pi_5(CP^2)",
    pi6="Z_6",
)


def r_of(p: BundleParams) -> int:
    return p.k * p.k - 4 * p.l


def check_r(r: int) -> int:
    if r % 4 not in (0, 1):
        raise NotRealizableError(f"r must lie in 4Z+{{0,1}}, got r={r}")
    return r


def params_for_r(r: int) -> BundleParams:
    """Canonical (k, l) with k in {0, 1} and k^2 - 4l = r."""
    check_r(r)
    if r % 4 == 0:
        return BundleParams(0, -r // 4)
    return BundleParams(1, (1 - r) // 4)


def milnor_params(k: int) -> BundleParams:
    """gamma_{k,k^2}, whose projectivization is the hypersurface sum x_i^k y_i = 0."""
    if k < 1:
        raise ValueError(f"Milnor index must be >= 1, got {k}")
    return BundleParams(k, k * k)


def milnor(k: int) -> int:
    return r_of(milnor_params(k))


def chern_c1(p: BundleParams) -> GradedElement:
    ring = make_pn_ring(p.k, p.l)
    return ring.element({"s": p.k - 3, "t": -2})


def pontrjagin_p1(p: BundleParams) -> GradedElement:
    ring = make_pn_ring(p.k, p.l)
    return ring.element({"s^2": p.k * p.k - 4 * p.l + 3})


def is_spin(r: int) -> bool:
    # w2 is c1 mod 2
    c1 = chern_c1(params_for_r(r))
    return all(c % 2 == 0 for c in c1.coeffs)


def homotopy_facts(r: int) -> HomotopyFacts:
    check_r(r)
    if r % 8 != 5:
        raise ValueError(f"homotopy facts are recorded only for r in 8Z+5, got r={r}")
    return _HOMOTOPY_FACTS
