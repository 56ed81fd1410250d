"""Exact integer linear algebra.

Row-style Hermite normal form, Smith normal form, lattice comparison and
quotients of Z^n by row lattices.  Everything runs on Python ints, so there
is no overflow however large the intermediate entries get.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

INFINITE = "infinite"


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples.

    ``cols`` is kept explicitly so that matrices with zero rows still know
    their width (the empty generating set of a sublattice of Z^n).
    """

    rows: tuple[tuple[int, ...], ...]
    cols: int

    def __init__(self, data: Iterable[Iterable[int]] = (), cols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        if cols is None:
            if not rows:
                raise ValueError("cols is required for a matrix without rows")
            cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise ValueError(f"ragged matrix: expected {cols} columns, got {len(row)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(([int(i == j) for j in range(n)] for i in range(n)), cols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> IntMatrix:
        return cls(([0] * ncols for _ in range(nrows)), cols=ncols)

    @classmethod
    def diag(cls, entries: Sequence[int]) -> IntMatrix:
        n = len(entries)
        return cls(([entries[i] if i == j else 0 for j in range(n)] for i in range(n)), cols=n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ocols = list(zip(*other.rows)) if other.nrows else [()] * other.cols
        return IntMatrix(
            ([sum(a * b for a, b in zip(row, col)) for col in ocols] for row in self.rows),
            cols=other.cols,
        )

    def transpose(self) -> IntMatrix:
        return IntMatrix(zip(*self.rows), cols=self.nrows) if self.nrows else IntMatrix.zeros(self.cols, 0)

    @property
    def T(self) -> IntMatrix:
        return self.transpose()

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def nonzero_rows(self) -> IntMatrix:
        return IntMatrix((row for row in self.rows if any(row)), cols=self.cols)

    def vstack(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.cols:
            raise ValueError("column counts differ")
        return IntMatrix(self.rows + other.rows, cols=self.cols)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        n = self.nrows
        if n != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __str__(self) -> str:
        if not self.rows:
            return f"[] (0x{self.cols})"
        width = max(len(str(x)) for row in self.rows for x in row) if self.cols else 1
        return "\n".join("[" + " ".join(str(x).rjust(width) for x in row) + "]" for row in self.rows)


def _as_matrix(m) -> IntMatrix:
    return m if isinstance(m, IntMatrix) else IntMatrix(m)


# -- row operations on mutable list-of-lists ---------------------------------

def _combine(a: list[list[int]], i: int, j: int, p: int, q: int, r: int, s: int) -> None:
    """Replace rows (i, j) by (p*row_i + q*row_j, r*row_i + s*row_j)."""
    ri, rj = a[i], a[j]
    a[i] = [p * x + q * y for x, y in zip(ri, rj)]
    a[j] = [r * x + s * y for x, y in zip(ri, rj)]


def _addmul(a: list[list[int]], dst: int, src: int, c: int) -> None:
    if c:
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]


def _elim(x: int, y: int) -> tuple[int, int, int, int]:
    """Unimodular (p, q, r, s) sending (x, y) to (g, 0)."""
    if x and y % x == 0:
        # plain subtraction; xgcd can return a swap here, which makes snf cycle
        return 1, 0, -y // x, 1
    g, p, q = xgcd(x, y)
    return p, q, -y // g, x // g


def hnf(m) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns ``(h, u)`` with ``u`` unimodular and ``u @ m == h``.  ``h`` is in
    row echelon form with positive pivots, every entry above a pivot lies in
    ``[0, pivot)``, and zero rows sit at the bottom.
    """
    m = _as_matrix(m)
    nr, nc = m.shape
    a = m.tolist()
    u = IntMatrix.identity(nr).tolist()
    piv_row = 0
    for col in range(nc):
        if piv_row == nr:
            break
        # gcd-combine every lower row into the pivot row
        for i in range(piv_row + 1, nr):
            if a[i][col] == 0:
                continue
            x, y = a[piv_row][col], a[i][col]
            p, q, r, s = _elim(x, y)
            _combine(a, piv_row, i, p, q, r, s)
            _combine(u, piv_row, i, p, q, r, s)
        pivot = a[piv_row][col]
        if pivot == 0:
            continue
        if pivot < 0:
            a[piv_row] = [-x for x in a[piv_row]]
            u[piv_row] = [-x for x in u[piv_row]]
            pivot = -pivot
        for i in range(piv_row):
            c = -(a[i][col] // pivot)
            _addmul(a, i, piv_row, c)
            _addmul(u, i, piv_row, c)
        piv_row += 1
    return IntMatrix(a, cols=nc), IntMatrix(u, cols=nr)


def snf(m) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form.

    Returns ``(d, u, v)`` with ``u``, ``v`` unimodular and ``u @ m @ v == d``.
    ``d`` is diagonal with nonnegative entries d1 | d2 | ..., zeros last.
    """
    m = _as_matrix(m)
    nr, nc = m.shape
    a = m.tolist()
    u = IntMatrix.identity(nr).tolist()
    # column operations are row operations on the transpose
    vt = IntMatrix.identity(nc).tolist()

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        vt[i], vt[j] = vt[j], vt[i]

    def col_combine(i, j, p, q, r, s):
        for row in a:
            x, y = row[i], row[j]
            row[i], row[j] = p * x + q * y, r * x + s * y
        _combine(vt, i, j, p, q, r, s)

    for t in range(min(nr, nc)):
        # bring some nonzero entry of the trailing block to (t, t)
        nz = [(i, j) for i in range(t, nr) for j in range(t, nc) if a[i][j]]
        if not nz:
            break
        i0, j0 = min(nz, key=lambda ij: abs(a[ij[0]][ij[1]]))
        if i0 != t:
            a[t], a[i0] = a[i0], a[t]
            u[t], u[i0] = u[i0], u[t]
        if j0 != t:
            swap_cols(t, j0)
        while True:
            done = True
            for i in range(t + 1, nr):
                if a[i][t]:
                    x, y = a[t][t], a[i][t]
                    p, q, r, s = _elim(x, y)
                    _combine(a, t, i, p, q, r, s)
                    _combine(u, t, i, p, q, r, s)
            for j in range(t + 1, nc):
                if a[t][j]:
                    x, y = a[t][t], a[t][j]
                    p, q, r, s = _elim(x, y)
                    col_combine(t, j, p, q, r, s)
                    done = False
            if not done and any(a[i][t] for i in range(t + 1, nr)):
                continue
            # pivot must divide the whole trailing block
            piv = a[t][t]
            bad = next(
                (i for i in range(t + 1, nr) for j in range(t + 1, nc) if a[i][j] % piv),
                None,
            )
            if bad is None:
                break
            _addmul(a, t, bad, 1)
            _addmul(u, t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    v = IntMatrix(vt, cols=nc).transpose() if nc else IntMatrix.zeros(0, 0)
    return IntMatrix(a, cols=nc), IntMatrix(u, cols=nr), v


def rank(m) -> int:
    return hnf(m)[0].nonzero_rows().nrows


def lattice_basis(m) -> IntMatrix:
    """HNF of the row span with zero rows dropped (a canonical basis)."""
    return hnf(m)[0].nonzero_rows()


def lattice_equal(a, b) -> bool:
    a, b = _as_matrix(a), _as_matrix(b)
    if a.cols != b.cols:
        raise ValueError(f"column counts differ: {a.cols} vs {b.cols}")
    return lattice_basis(a) == lattice_basis(b)


def in_span(v: Sequence[int], lat) -> bool:
    """Whether ``v`` is an integer combination of the rows of ``lat``."""
    lat = _as_matrix(lat)
    if len(v) != lat.cols:
        raise ValueError("vector length does not match column count")
    basis = lattice_basis(lat)
    rest = list(v)
    for row in basis:
        col = next(j for j, x in enumerate(row) if x)
        if any(rest[:col]):
            return False
        q, r = divmod(rest[col], row[col])
        if r:
            return False
        rest = [x - q * y for x, y in zip(rest, row)]
    return not any(rest)


def element_order(v: Sequence[int], lat) -> int | str:
    """Order of the class of ``v`` in Z^n / rowspan(lat), or ``INFINITE``."""
    lat = _as_matrix(lat)
    if len(v) != lat.cols:
        raise ValueError("vector length does not match column count")
    d, _, vmat = snf(lat)
    # rowspan(lat) = rowspan(d @ v^-1), so x is in it iff x @ v lies in rowspan(d)
    w = (IntMatrix([v]) @ vmat).rows[0] if lat.cols else ()
    order = 1
    for i, wi in enumerate(w):
        di = d[i, i] if i < min(d.shape) else 0
        if di == 0:
            if wi:
                return INFINITE
            continue
        order = lcm(order, di // gcd(di, wi))
    return order


@dataclass(frozen=True)
class FinAbGroup:
    """Finitely generated abelian group: invariant factors d1 | d2 | ... plus Z^free_rank."""

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        factors = tuple(int(d) for d in self.invariant_factors)
        if any(d < 2 for d in factors):
            raise ValueError(f"invariant factors must be >= 2: {factors}")
        if any(b % a for a, b in zip(factors, factors[1:])):
            raise ValueError(f"invariant factors must form a divisibility chain: {factors}")
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        object.__setattr__(self, "invariant_factors", factors)

    @classmethod
    def from_orders(cls, orders: Iterable[int], free_rank: int = 0) -> FinAbGroup:
        """Normalize a direct sum of cyclic groups Z_a (+) Z_b (+) ... ."""
        orders = [abs(int(o)) for o in orders]
        if any(o == 0 for o in orders):
            raise ValueError("use free_rank for infinite cyclic summands")
        d, _, _ = snf(IntMatrix.diag(orders)) if orders else (IntMatrix.zeros(0, 0), None, None)
        factors = [d[i, i] for i in range(len(orders)) if d[i, i] > 1]
        return cls(tuple(factors), free_rank)

    @property
    def order(self) -> int | str:
        if self.free_rank:
            return INFINITE
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def __str__(self) -> str:
        return format_group([f"Z_{d}" for d in self.invariant_factors], self.free_rank)


def format_group(summands: Sequence[str], free_rank: int = 0) -> str:
    parts = list(summands)
    if free_rank:
        parts.append("Z" if free_rank == 1 else f"Z^{free_rank}")
    return " ⊕ ".join(parts) if parts else "0"


def quotient_group(n: int, lat) -> FinAbGroup:
    """Z^n modulo the row span of ``lat``."""
    if not isinstance(lat, IntMatrix):
        lat = IntMatrix(lat, cols=n)
    if lat.cols != n:
        raise ValueError(f"lattice has {lat.cols} columns, expected {n}")
    if lat.nrows == 0 or n == 0:
        return FinAbGroup((), n)
    d, _, _ = snf(lat)
    diag = [d[i, i] for i in range(min(d.shape))]
    nonzero = [x for x in diag if x]
    return FinAbGroup(tuple(x for x in nonzero if x > 1), n - len(nonzero))
