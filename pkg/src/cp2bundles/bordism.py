"""Characteristic numbers of generators of the 8-dimensional spin bordism of CP^oo x CP^oo.

An element of the bordism group is a spin 8-manifold with two degree-2 classes
(x, y).  Its characteristic row lists

    <p1hat x^2>, <p1hat xy>, <p1hat y^2>, <x^4>, <x^3 y>, <x^2 y^2>, <x y^3>, <y^4>, <p1hat^2>

together with the signature, where p1hat is the spin Pontrjagin class of the
stable normal bundle: p1hat = -p1(tangent)/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .gring import GradedElement, RingPresentation
from .intlat import IntMatrix, hnf, lattice_basis, lattice_equal

CHAR_COLUMNS = ("p1x2", "p1xy", "p1y2", "x4", "x3y", "x2y2", "xy3", "y4", "p1p1")

MANIFOLD_NAMES = ("M1", "M2", "M3", "M4", "M5", "M6", "M7", "M8", "HP2", "Bott")


@dataclass(frozen=True)
class CharRow:
    values: tuple[int, ...]
    signature: int

    def __post_init__(self):
        if len(self.values) != len(CHAR_COLUMNS):
            raise ValueError(f"a characteristic row has {len(CHAR_COLUMNS)} entries")

    def as_dict(self) -> dict[str, int]:
        return dict(zip(CHAR_COLUMNS, self.values))

    def with_signature(self) -> tuple[int, ...]:
        return self.values + (self.signature,)


@dataclass(frozen=True)
class ManifoldPresentation:
    name: str
    description: str
    signature: int
    ring: Optional[RingPresentation] = None
    x_class: Optional[GradedElement] = None
    y_class: Optional[GradedElement] = None
    tangent_p1: Optional[GradedElement] = None
    data_row: Optional[tuple[int, ...]] = field(default=None)

    @property
    def data_only(self) -> bool:
        return self.ring is None


# Generator tables as printed; 224 is the Bott signature.
PRINTED_M_TABLE = {
    "M1": ((0, 0, 0, 24, 0, 0, 0, 0, 0), 0),
    "M2": ((0, 0, 0, 0, 6, 0, 0, 0, 0), 0),
    "M3": ((0, 0, 0, 0, 0, 0, 0, 24, 0), 0),
    "M4": ((-2, 0, 0, 2, 0, 0, 0, 0, 2), 2),
    "M5": ((0, -2, 0, 0, 0, 0, 1, 0, 0), 0),
    "M6": ((-2, -2, -2, 2, 2, 2, 2, 2, 2), 2),
    "M7": ((0, -2, 0, 0, 0, 0, 1, 0, 0), 0),
    "M8": ((0, 0, -2, 0, 0, 0, 0, 2, 2), 2),
    "HP2": ((0, 0, 0, 0, 0, 0, 0, 0, 1), 1),
    "Bott": ((0, 0, 0, 0, 0, 0, 0, 0, 0), 224),
}

# The printed M7 row repeats M5.  Swapping (x, y) = (b, a) on P^1 x P^3 exchanges
# x^3y and xy^3, so M7 has <x^3 y> = <b^3 a> = 1 and <x y^3> = 0.
M7_CORRECTED = ((0, -2, 0, 0, 1, 0, 0, 0, 0), 0)

B_TABLE = {
    "b1": ((24, 0, 0, 0, 0, 0, 0, 0, 0), 0),
    "b2": ((0, 12, 0, 0, 0, 0, 0, 0, 0), 0),
    "b3": ((0, 0, 24, 0, 0, 0, 0, 0, 0), 0),
    "b4": ((-2, 0, 0, 2, 0, 0, 0, 0, 0), 0),
    "b5": ((0, -2, 0, 0, 1, 0, 0, 0, 0), 0),
    "b6": ((0, 6, 0, 0, 0, 2, 0, 0, 0), 0),
    "b7": ((0, -2, 0, 0, 0, 0, 1, 0, 0), 0),
    "b8": ((0, 0, -2, 0, 0, 0, 0, 2, 0), 0),
    "HP2": ((0, 0, 0, 0, 0, 0, 0, 0, 1), 1),
    "Bott": ((0, 0, 0, 0, 0, 0, 0, 0, 0), 224),
}


def signature_zero_basis() -> dict[str, tuple[int, ...]]:
    """b1..b9 with b9 = 224 HP^2 - Bott; the basis of the signature-zero subgroup."""
    rows = {name: row for name, (row, _) in B_TABLE.items() if name.startswith("b")}
    hp, _ = B_TABLE["HP2"]
    bott, _ = B_TABLE["Bott"]
    rows["b9"] = tuple(224 * a - b for a, b in zip(hp, bott))
    return rows


@lru_cache(maxsize=None)
def _quadric() -> RingPresentation:
    # only the subring generated by the hyperplane class h is needed
    return RingPresentation([("h", 2)], 8, pairing={"h^4": 2}, name="V^4_2 (quadric in P^5)")


@lru_cache(maxsize=None)
def _p1xp3() -> RingPresentation:
    return RingPresentation(
        [("a", 2), ("b", 2)], 8, rules={"a^2": {}, "b^4": {}}, pairing={"a*b^3": 1}, name="P^1 x P^3"
    )


@lru_cache(maxsize=None)
def _s2_4() -> RingPresentation:
    gens = [(f"d{i}", 2) for i in range(1, 5)]
    return RingPresentation(
        gens, 8, rules={f"d{i}^2": {} for i in range(1, 5)}, pairing={"d1*d2*d3*d4": 1}, name="(S^2)^4"
    )


def builtin_manifold(name: str) -> ManifoldPresentation:
    if name == "HP2":
        return ManifoldPresentation("HP2", "quaternionic projective plane", 1, data_row=B_TABLE["HP2"][0])
    if name == "Bott":
        return ManifoldPresentation("Bott", "Bott manifold", 224, data_row=B_TABLE["Bott"][0])
    if name in ("M4", "M6", "M8"):
        q = _quadric()
        h = q.gen("h")
        c = -h  # c_1(O(-1)) restricted
        zero = q.zero(2)
        x, y = {"M4": (c, zero), "M6": (c, c), "M8": (zero, c)}[name]
        # p1(T P^5) - p1(O(2)) = 6h^2 - 4h^2
        return ManifoldPresentation(name, "(V^4_2, %s)" % {"M4": "c, 0", "M6": "c, c", "M8": "0, c"}[name],
                                    2, q, x, y, h * h * 2)
    if name in ("M5", "M7"):
        ring = _p1xp3()
        a, b = ring.gens()
        x, y = (a, b) if name == "M5" else (b, a)
        desc = "(P^1 x P^3, a, b)" if name == "M5" else "(P^1 x P^3, b, a)"
        return ManifoldPresentation(name, desc, 0, ring, x, y, b * b * 4)
    if name in ("M1", "M2", "M3"):
        ring = _s2_4()
        d = ring.gens()
        total = d[0] + d[1] + d[2] + d[3]
        zero = ring.zero(2)
        x, y, desc = {
            "M1": (total, zero, "((S^2)^4, d1+d2+d3+d4, 0)"),
            "M2": (d[0] + d[1] + d[2], d[3], "((S^2)^4, d1+d2+d3, d4)"),
            "M3": (zero, total, "((S^2)^4, 0, d1+d2+d3+d4)"),
        }[name]
        return ManifoldPresentation(name, desc, 0, ring, x, y, ring.zero(4))
    raise KeyError(f"unknown manifold {name!r}; choose from {MANIFOLD_NAMES}")


def normal_p1hat(tangent_p1: GradedElement) -> GradedElement:
    if any(c % 2 for c in tangent_p1.coeffs):
        raise ValueError("tangent p1 must be divisible by 2 on a spin manifold")
    return GradedElement(tangent_p1.ring, tangent_p1.degree, tuple(-c // 2 for c in tangent_p1.coeffs))


def char_row(m: ManifoldPresentation) -> CharRow:
    if m.data_only:
        return CharRow(tuple(m.data_row), m.signature)
    ev = m.ring.evaluate
    x, y, p = m.x_class, m.y_class, normal_p1hat(m.tangent_p1)
    values = (
        ev(p * x * x), ev(p * x * y), ev(p * y * y),
        ev(x ** 4), ev(x ** 3 * y), ev(x * x * y * y), ev(x * y ** 3), ev(y ** 4),
        ev(p * p),
    )
    return CharRow(values, m.signature)


def signature_zero_sublattice(rows: IntMatrix) -> IntMatrix:
    """HNF basis of {v in rowspan(rows) : last coordinate = 0}, last column dropped."""
    basis = lattice_basis(rows)
    sig = IntMatrix([[row[-1]] for row in basis], cols=1)
    _, u = hnf(sig)
    # rows of u below the first generate the kernel of the signature map on the basis
    kernel_coeffs = IntMatrix(u.rows[1:], cols=basis.nrows) if sig.rows and any(sig.T.rows[0]) else u
    kernel = kernel_coeffs @ basis if kernel_coeffs.nrows else IntMatrix.zeros(0, rows.cols)
    assert all(row[-1] == 0 for row in kernel)
    return lattice_basis(IntMatrix((row[:-1] for row in kernel), cols=rows.cols - 1))


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class AppendixReport:
    checks: list[Check]
    notes: list[str]
    rows: dict[str, CharRow]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _m_matrix(rows: dict[str, CharRow]) -> IntMatrix:
    return IntMatrix(rows[n].with_signature() for n in MANIFOLD_NAMES)


def verify_appendix(correct_m7: bool = True) -> AppendixReport:
    """Recompute the generator rows and check both generator tables against each other.

    With ``correct_m7=False`` the recomputed M7 row is compared with the row as
    printed, which fails.
    """
    rows = {name: char_row(builtin_manifold(name)) for name in MANIFOLD_NAMES}
    checks: list[Check] = []
    notes: list[str] = []

    for name in MANIFOLD_NAMES:
        expected = PRINTED_M_TABLE[name]
        if name == "M7" and correct_m7:
            expected = M7_CORRECTED
            printed = CharRow(*PRINTED_M_TABLE["M7"])
            notes.append(
                "M7 compared against corrected row: printed "
                f"{printed.as_dict()} vs computed {rows['M7'].as_dict()} (x^3y/xy^3 swapped)"
            )
        got = rows[name]
        ok = got.values == expected[0] and got.signature == expected[1]
        detail = "" if ok else f"expected {expected[0]} | sign {expected[1]}, computed {got.values} | sign {got.signature}"
        checks.append(Check(f"row {name}", ok, detail))

    m_table = _m_matrix(rows)
    b_table = IntMatrix(row + (sig,) for row, sig in B_TABLE.values())
    same = lattice_equal(m_table, b_table)
    checks.append(Check("M-table and b-table span the same lattice", same,
                        "" if same else f"HNFs differ:\n{lattice_basis(m_table)}\nvs\n{lattice_basis(b_table)}"))

    kernel = signature_zero_sublattice(m_table)
    b_basis = lattice_basis(IntMatrix(signature_zero_basis().values()))
    same_kernel = kernel == b_basis
    checks.append(Check("signature-zero sublattice is spanned by b1..b9", same_kernel,
                        "" if same_kernel else f"{kernel}\nvs\n{b_basis}"))
    return AppendixReport(checks, notes, rows)
