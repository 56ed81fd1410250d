"""Action of self-diffeomorphisms of P(gamma_{k,l}) on H^2.

A diffeomorphism f is recorded by the 2x2 integer matrix M with
(s, t) M = f^*(s, t), i.e. f^*(s) = M11 s + M21 t and f^*(t) = M12 s + M22 t.
The image of MCG in GL_2(Z) is the set of such matrices that extend to ring
automorphisms preserving the orientation class s^2 t and p1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .bundles import BundleParams, check_r, params_for_r, r_of
from .gring import make_pn_ring
from .intlat import FinAbGroup, IntMatrix

AutomorphismSet = frozenset  # of 2x2 IntMatrix

IDENTITY = IntMatrix.identity(2)
H = IntMatrix([[0, 1], [1, 0]])
NOT_COMPUTED = "not computed"


def X(k: int) -> IntMatrix:
    """Matrix of the conjugation-induced diffeomorphism f1: s -> -s, t -> t - k s."""
    return IntMatrix([[-1, -k], [0, 1]])


def det2(m: IntMatrix) -> int:
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]


def inverse2(m: IntMatrix) -> IntMatrix:
    d = det2(m)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    return IntMatrix([[d * m[1, 1], -d * m[0, 1]], [-d * m[1, 0], d * m[0, 0]]])


def is_admissible(p: BundleParams, m: IntMatrix) -> bool:
    """Whether m induces an orientation- and p1-preserving automorphism of H^*(P(gamma_{k,l}))."""
    if det2(m) not in (1, -1):
        raise ValueError("action matrices must be unimodular")
    ring = make_pn_ring(p.k, p.l)
    fs = ring.from_coeffs(2, (m[0, 0], m[1, 0]))
    ft = ring.from_coeffs(2, (m[0, 1], m[1, 1]))
    fs2 = fs * fs
    if not (fs2 * fs).is_zero():
        return False
    if not (ft * ft - ft * fs * p.k + fs2 * p.l).is_zero():
        return False
    if ring.evaluate(fs2 * ft) != 1:
        return False
    p1_coeff = r_of(p) + 3
    s2 = ring.element({"s^2": 1})
    return fs2 * p1_coeff == s2 * p1_coeff


def _close(gens: Iterable[IntMatrix]) -> frozenset:
    group = {IDENTITY}
    frontier = [IDENTITY]
    gens = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a @ g
                if b not in group:
                    group.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(group)


def is_group(mats: frozenset) -> bool:
    return IDENTITY in mats and all(a @ b in mats for a in mats for b in mats) and all(
        inverse2(a) in mats for a in mats
    )


def matrix_order(m: IntMatrix, limit: int = 12) -> Union[int, str]:
    power = m
    for n in range(1, limit + 1):
        if power == IDENTITY:
            return n
        power = power @ m
    return "infinite"


def s3_set() -> frozenset:
    """{I, X1, H, H X1, X1 H, H X1 H} in the basis of P(gamma_{1,1})."""
    x1 = X(1)
    return frozenset({IDENTITY, x1, H, H @ x1, x1 @ H, H @ x1 @ H})


def image_of_R(p: BundleParams) -> frozenset:
    r = r_of(p)
    if r != -3:
        result = frozenset({IDENTITY, X(p.k)})
    else:
        # k is odd here; t = t' + c s with c = (k-1)/2 turns the (k, l) presentation
        # into the (1, 1) one, so (s, t) = (s, t') P and matrices conjugate by P
        c = (p.k - 1) // 2
        P = IntMatrix([[1, c], [0, 1]])
        Pinv = inverse2(P)
        result = frozenset(Pinv @ m @ P for m in s3_set())
    if not is_group(result):
        raise AssertionError(f"image for {p} is not closed under products")
    return result


@lru_cache(maxsize=None)
def _unimodular_box(bound: int) -> tuple[IntMatrix, ...]:
    rng = range(-bound, bound + 1)
    out = []
    for a, b, c, d in itertools.product(rng, repeat=4):
        if a * d - b * c in (1, -1):
            out.append(IntMatrix([[a, b], [c, d]]))
    return tuple(out)


def brute_force_automorphisms(p: BundleParams, bound: int) -> frozenset:
    """All unimodular matrices with entries in [-bound, bound] passing is_admissible."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    return frozenset(m for m in _unimodular_box(bound) if is_admissible(p, m))


def default_bound(p: BundleParams) -> int:
    return abs(p.k) + 3


def sorted_matrices(mats: Iterable[IntMatrix]) -> list[IntMatrix]:
    return sorted(mats, key=lambda m: m.rows)


@dataclass(frozen=True)
class ExtensionDescriptor:
    """1 -> Torelli -> MCG(N_r) -> quotient -> 1."""

    r: int
    torelli: Union[FinAbGroup, str]
    quotient_tag: str
    quotient_matrices: frozenset

    def __post_init__(self):
        if (self.quotient_tag == "S3") != (len(self.quotient_matrices) == 6):
            raise ValueError("quotient tag S3 goes with exactly six matrices")


def extension(r: int) -> ExtensionDescriptor:
    check_r(r)
    mats = image_of_R(params_for_r(r))
    torelli: Union[FinAbGroup, str] = NOT_COMPUTED
    if r % 8 == 5:
        from .kreck_stolz import torelli_group

        torelli = torelli_group((r - 5) // 8).group
    return ExtensionDescriptor(r, torelli, "S3" if r == -3 else "Z2", mats)
