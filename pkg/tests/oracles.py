"""Independent reference computations used to freeze expected values.

Nothing here touches the HNF/SNF code under test: determinants go through
exact rational elimination and lattice membership through enumeration.
"""

from fractions import Fraction
from itertools import combinations, product
from math import gcd


def rational_det(rows):
    a = [[Fraction(x) for x in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for j in range(c, n):
                    a[r][j] -= f * a[c][j]
    assert det.denominator == 1
    return int(det)


def determinantal_divisors(rows):
    """D_j = gcd of all j x j minors, j = 1..min(shape)."""
    nr, nc = len(rows), len(rows[0]) if rows else 0
    out = []
    for j in range(1, min(nr, nc) + 1):
        g = 0
        for ri in combinations(range(nr), j):
            for ci in combinations(range(nc), j):
                g = gcd(g, rational_det([[rows[r][c] for c in ci] for r in ri]))
                if g == 1:
                    break
            if g == 1:
                break
        out.append(g)
    return out


def invariant_factors_from_divisors(divs):
    out, prev = [], 1
    for d in divs:
        if d == 0:
            out.append(0)
            continue
        out.append(d // prev)
        prev = d
    return out


def lattice_points(rows, box, coeff_bound):
    """Integer combinations of ``rows`` with |coeff| <= coeff_bound that fall in [-box, box]^n."""
    pts = set()
    for coeffs in product(range(-coeff_bound, coeff_bound + 1), repeat=len(rows)):
        v = tuple(sum(c * row[j] for c, row in zip(coeffs, rows)) for j in range(len(rows[0])))
        if all(abs(x) <= box for x in v):
            pts.add(v)
    return pts


def rational_solve(rows, v):
    """Coefficients c with sum c_i rows[i] = v, for square nonsingular ``rows``."""
    n = len(rows)
    # columns of the transposed system
    a = [[Fraction(rows[i][j]) for i in range(n)] + [Fraction(v[j])] for j in range(n)]
    for c in range(n):
        piv = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c] / a[c][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [a[i][n] / a[i][i] for i in range(n)]
