"""Small engine for evenly graded commutative rings over Z.

A ring is given by generators with (even) degrees, a truncation degree above
which everything vanishes, monomial rewrite rules ``lhs -> sum c_i m_i`` and
an integer pairing on the top degree.  Elements are coefficient vectors on the
canonical basis of each degree: the monomials that no rule can rewrite.

Basis monomials of a degree are ordered colexicographically (compare the
exponent of the last generator first), so with generators ``(x, y, p)`` the
degree-8 basis reads ``x^4, x^3*y, x^2*y^2, x*y^3, y^4, x^2*p, x*y*p, y^2*p, p^2``.
"""

from __future__ import annotations

import re
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

Monomial = tuple[int, ...]
MonomialLike = Union[str, Monomial]

_FACTOR = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9]*)\s*(?:\^\s*(\d+))?\s*")


class PresentationError(ValueError):
    """Raised for malformed ring presentations (bad degrees, non-confluent rules)."""


class RingPresentation:
    def __init__(
        self,
        generators: Sequence[tuple[str, int]],
        truncation_degree: int,
        rules: Mapping[MonomialLike, Mapping[MonomialLike, int]] | None = None,
        pairing: Mapping[MonomialLike, int] | None = None,
        name: str = "",
    ):
        self.name = name
        self.generators = tuple((str(g), int(d)) for g, d in generators)
        self.names = tuple(g for g, _ in self.generators)
        self.degrees = tuple(d for _, d in self.generators)
        if len(set(self.names)) != len(self.names):
            raise PresentationError(f"duplicate generator names {self.names}")
        if any(d <= 0 or d % 2 for d in self.degrees):
            raise PresentationError("only positive even-degree generators are supported")
        if truncation_degree < 0 or truncation_degree % 2:
            raise PresentationError("truncation degree must be even and nonnegative")
        self.truncation_degree = truncation_degree
        self.top_degree = truncation_degree

        self.rules: tuple[tuple[Monomial, dict[Monomial, int]], ...] = ()
        parsed = []
        for lhs, rhs in (rules or {}).items():
            lm = self.monomial(lhs)
            rm = {}
            for mono, c in rhs.items():
                m = self.monomial(mono)
                if c and self.mono_degree(m) != self.mono_degree(lm):
                    raise PresentationError(
                        f"rule {self.format_monomial(lm)} -> ... is not degree-preserving"
                    )
                if c:
                    rm[m] = rm.get(m, 0) + int(c)
            parsed.append((lm, {m: c for m, c in rm.items() if c}))
        self.rules = tuple(parsed)

        self._monomials = {d: self._enumerate(d) for d in range(0, truncation_degree + 1, 2)}
        self._basis = {
            d: tuple(m for m in ms if self._applicable(m) is None) for d, ms in self._monomials.items()
        }
        self._index = {d: {m: i for i, m in enumerate(b)} for d, b in self._basis.items()}
        self._nf: dict[Monomial, dict[Monomial, int]] = {}
        for d in self._monomials:
            for m in self._monomials[d]:
                self._normal_form(m, frozenset())
        self._check_confluence()

        self.pairing: dict[Monomial, int] = {}
        for mono, value in (pairing or {}).items():
            m = self.monomial(mono)
            if m not in self._index.get(self.top_degree, {}):
                raise PresentationError(
                    f"pairing is defined on top-degree basis monomials, got {self.format_monomial(m)}"
                )
            self.pairing[m] = int(value)

    def __repr__(self) -> str:
        return f"RingPresentation({self.name or ', '.join(self.names)})"

    # -- monomials -------------------------------------------------------

    def monomial(self, spec: MonomialLike) -> Monomial:
        """Parse ``"s^2*t"`` (or ``"s^2 t"``, ``"1"``) or check an exponent tuple."""
        if isinstance(spec, tuple):
            if len(spec) != len(self.names) or any(e < 0 for e in spec):
                raise ValueError(f"bad exponent vector {spec}")
            return tuple(int(e) for e in spec)
        exps = [0] * len(self.names)
        text = spec.strip()
        if text in ("", "1"):
            return tuple(exps)
        for factor in re.split(r"\*|\s+(?=[A-Za-z_])", text):
            match = _FACTOR.fullmatch(factor)
            if not match or match.group(1) not in self.names:
                raise ValueError(f"cannot parse monomial {spec!r}")
            exps[self.names.index(match.group(1))] += int(match.group(2) or 1)
        return tuple(exps)

    def mono_degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees))

    def format_monomial(self, m: Monomial) -> str:
        parts = [g if e == 1 else f"{g}^{e}" for g, e in zip(self.names, m) if e]
        return "*".join(parts) if parts else "1"

    def _enumerate(self, degree: int) -> tuple[Monomial, ...]:
        out: list[Monomial] = []

        def rec(i, remaining, acc):
            if i == len(self.degrees):
                if remaining == 0:
                    out.append(tuple(acc))
                return
            for e in range(remaining // self.degrees[i] + 1):
                rec(i + 1, remaining - e * self.degrees[i], acc + [e])

        rec(0, degree, [])
        return tuple(sorted(out, key=lambda m: m[::-1]))

    def _applicable(self, m: Monomial) -> int | None:
        for k, (lhs, _) in enumerate(self.rules):
            if all(a >= b for a, b in zip(m, lhs)):
                return k
        return None

    def _rewrite_once(self, m: Monomial, k: int) -> dict[Monomial, int]:
        lhs, rhs = self.rules[k]
        quotient = tuple(a - b for a, b in zip(m, lhs))
        out: dict[Monomial, int] = {}
        for r, c in rhs.items():
            mono = tuple(a + b for a, b in zip(r, quotient))
            out[mono] = out.get(mono, 0) + c
        return out

    def _normal_form(self, m: Monomial, stack: frozenset) -> dict[Monomial, int]:
        if m in self._nf:
            return self._nf[m]
        if self.mono_degree(m) > self.truncation_degree:
            return {}
        if m in stack:
            raise PresentationError(f"rewriting does not terminate at {self.format_monomial(m)}")
        k = self._applicable(m)
        if k is None:
            result = {m: 1}
        else:
            result = self._reduce(self._rewrite_once(m, k), stack | {m})
        self._nf[m] = result
        return result

    def _reduce(self, combo: Mapping[Monomial, int], stack: frozenset) -> dict[Monomial, int]:
        out: dict[Monomial, int] = {}
        for mono, c in combo.items():
            for b, cb in self._normal_form(mono, stack).items():
                out[b] = out.get(b, 0) + c * cb
        return {b: c for b, c in out.items() if c}

    def _check_confluence(self) -> None:
        # with termination, agreeing one-step successors everywhere gives confluence
        for d, monos in self._monomials.items():
            for m in monos:
                target = self._nf[m]
                for k, (lhs, _) in enumerate(self.rules):
                    if all(a >= b for a, b in zip(m, lhs)):
                        got = self._reduce(self._rewrite_once(m, k), frozenset())
                        if got != target:
                            raise PresentationError(
                                f"rules are not confluent at {self.format_monomial(m)}"
                            )

    # -- elements --------------------------------------------------------

    def basis(self, degree: int) -> tuple[Monomial, ...]:
        return self._basis.get(degree, ())

    def basis_names(self, degree: int) -> tuple[str, ...]:
        return tuple(self.format_monomial(m) for m in self.basis(degree))

    def rank(self, degree: int) -> int:
        return len(self.basis(degree))

    def zero(self, degree: int) -> GradedElement:
        return GradedElement(self, degree, (0,) * self.rank(degree))

    def one(self) -> GradedElement:
        return GradedElement(self, 0, (1,))

    def gen(self, name: str) -> GradedElement:
        return self.element({name: 1})

    def gens(self) -> tuple[GradedElement, ...]:
        return tuple(self.gen(g) for g in self.names)

    def from_coeffs(self, degree: int, coeffs: Iterable[int]) -> GradedElement:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.rank(degree):
            raise ValueError(f"degree {degree} has rank {self.rank(degree)}, got {len(coeffs)} coefficients")
        return GradedElement(self, degree, coeffs)

    def element(self, terms: Mapping[MonomialLike, int]) -> GradedElement:
        """Homogeneous element from ``{monomial: coefficient}``, reduced to normal form."""
        monos = {self.monomial(k): int(v) for k, v in terms.items()}
        degrees = {self.mono_degree(m) for m in monos}
        if len(degrees) != 1:
            raise ValueError("element must be homogeneous and nonempty")
        (degree,) = degrees
        out = [0] * self.rank(degree)
        for m, c in monos.items():
            for b, cb in self._nf.get(m, {}).items():
                out[self._index[degree][b]] += c * cb
        return GradedElement(self, degree, tuple(out))

    def _product_nf(self, m1: Monomial, m2: Monomial) -> dict[Monomial, int]:
        return self._nf.get(tuple(a + b for a, b in zip(m1, m2)), {})

    def evaluate(self, a: GradedElement) -> int:
        """Pair a top-degree class against the fundamental class."""
        if a.ring is not self:
            raise ValueError("element belongs to another ring")
        if a.degree != self.top_degree:
            raise ValueError(f"evaluate needs degree {self.top_degree}, got {a.degree}")
        if not self.pairing:
            raise ValueError(f"{self!r} has no fundamental-class pairing")
        return sum(c * self.pairing.get(m, 0) for m, c in zip(self.basis(a.degree), a.coeffs))

    def pair(self, a: GradedElement, weights: Mapping[MonomialLike, int]) -> int:
        """Dot product of ``a`` with numbers assigned to basis monomials of its degree."""
        w = {self.monomial(k): v for k, v in weights.items()}
        unknown = [m for m in w if m not in self._index.get(a.degree, {})]
        if unknown:
            raise ValueError(f"weights on non-basis monomials: {[self.format_monomial(m) for m in unknown]}")
        return sum(c * w.get(m, 0) for m, c in zip(self.basis(a.degree), a.coeffs))


@dataclass(frozen=True, eq=False)
class GradedElement:
    ring: RingPresentation
    degree: int
    coeffs: tuple[int, ...]

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not any(self.coeffs)
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.ring is other.ring and self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.ring), self.degree, self.coeffs))

    def _check(self, other: GradedElement) -> None:
        if other.ring is not self.ring:
            raise ValueError("elements of different rings")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        if other.degree != self.degree:
            raise ValueError(f"cannot add degrees {self.degree} and {other.degree}")
        return GradedElement(self.ring, self.degree, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return GradedElement(self.ring, self.degree, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GradedElement(self.ring, self.degree, tuple(other * a for a in self.coeffs))
        self._check(other)
        ring = self.ring
        degree = self.degree + other.degree
        out = [0] * ring.rank(degree)
        if out:
            index = ring._index[degree]
            for m1, c1 in zip(ring.basis(self.degree), self.coeffs):
                if not c1:
                    continue
                for m2, c2 in zip(ring.basis(other.degree), other.coeffs):
                    if c2:
                        for b, cb in ring._product_nf(m1, m2).items():
                            out[index[b]] += c1 * c2 * cb
        return GradedElement(ring, degree, tuple(out))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def terms(self) -> dict[str, int]:
        return {
            self.ring.format_monomial(m): c for m, c in zip(self.ring.basis(self.degree), self.coeffs) if c
        }

    def coefficient(self, mono: MonomialLike) -> int:
        m = self.ring.monomial(mono)
        return self.coeffs[self.ring._index[self.degree][m]]

    def __str__(self) -> str:
        parts = []
        for name, c in self.terms().items():
            if name == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __repr__(self) -> str:
        return f"<{self} in degree {self.degree}>"


def substitute(a: GradedElement, images: Mapping[str, GradedElement]) -> GradedElement:
    """Send each generator of ``a.ring`` to the given image and evaluate.

    The result is a ring homomorphism only when the images satisfy the
    relations of the source ring; checking that is the caller's business.
    """
    src = a.ring
    missing = set(src.names) - set(images)
    if missing:
        raise ValueError(f"no image for generators {sorted(missing)}")
    target = next(iter(images.values())).ring
    for g, d in src.generators:
        if images[g].ring is not target or images[g].degree != d:
            raise ValueError(f"image of {g} must be a degree-{d} element of the target ring")
    result = target.zero(a.degree)
    for m, c in zip(src.basis(a.degree), a.coeffs):
        if not c:
            continue
        term = target.one()
        for g, e in zip(src.names, m):
            for _ in range(e):
                term = term * images[g]
        result = result + term * c
    return result


def polynomial_ring(generators: Sequence[tuple[str, int]], truncation_degree: int, name: str = "") -> RingPresentation:
    """Free graded polynomial ring truncated above ``truncation_degree``."""
    return RingPresentation(generators, truncation_degree, name=name)


@lru_cache(maxsize=None)
def make_pn_ring(k: int, l: int) -> RingPresentation:
    """Cohomology of the projectivization of the rank-2 bundle with c = 1 + kx + lx^2.

    Z[s, t]/(s^3, t^2 - k*t*s + l*s^2) with <s^2*t, [M]> = 1.
    """
    return RingPresentation(
        [("s", 2), ("t", 2)],
        6,
        rules={"s^3": {}, "t^2": {"s*t": k, "s^2": -l}},
        pairing={"s^2*t": 1},
        name=f"H*(P(gamma_{k},{l}))",
    )
