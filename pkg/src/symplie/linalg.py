"""Exact rational vectors, matrices and rank-3 tensors.

Everything is a nested tuple of fractions.Fraction, built once and never
mutated, so values are hashable and safe to share.  Target dimensions are
small (doubles of doubles of 2-dimensional algebras), so dense storage is
the right trade-off.

Rank and inversion run a fraction-free (Bareiss-style) forward elimination
on integer-scaled rows, which keeps intermediate entries as minors of the
input instead of letting numerators and denominators blow up.
"""

from fractions import Fraction
from math import gcd, isqrt


class SingularMatrix(Exception):
    pass


class DimensionMismatch(Exception):
    pass


def frac(x, y=None):
    if y is None:
        return Fraction(x)
    return Fraction(x, y)


# ---------------------------------------------------------------------------
# vectors

def vec(entries):
    return tuple(Fraction(e) for e in entries)


def vec_zero(n):
    return (Fraction(0),) * n


def basis_vec(n, i):
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("vector lengths %d and %d" % (len(u), len(v)))
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("vector lengths %d and %d" % (len(u), len(v)))
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u):
    return tuple(-a for a in u)


def vec_scale(q, u):
    q = Fraction(q)
    return tuple(q * a for a in u)


def vec_is_zero(u):
    return all(a == 0 for a in u)


def dot(u, v):
    if len(u) != len(v):
        raise DimensionMismatch("vector lengths %d and %d" % (len(u), len(v)))
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


# ---------------------------------------------------------------------------
# matrices (tuple of row tuples)

def mat(rows):
    out = tuple(tuple(Fraction(e) for e in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise DimensionMismatch("ragged rows")
    return out


def mat_zero(n, m=None):
    if m is None:
        m = n
    return tuple((Fraction(0),) * m for _ in range(n))


def mat_identity(n):
    return tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))


def mat_add(a, b):
    if len(a) != len(b) or len(a[0]) != len(b[0]):
        raise DimensionMismatch("matrix shapes differ")
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    if len(a) != len(b) or len(a[0]) != len(b[0]):
        raise DimensionMismatch("matrix shapes differ")
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def mat_scale(q, a):
    q = Fraction(q)
    return tuple(tuple(q * x for x in row) for row in a)


def mat_mul(a, b):
    if len(a[0]) != len(b):
        raise DimensionMismatch("inner dimensions %d and %d" % (len(a[0]), len(b)))
    m = len(b[0])
    zero = Fraction(0)
    out = []
    for row in a:
        # structure constants are mostly zero, so skip empty terms instead
        # of grinding through dense Fraction products
        acc = [zero] * m
        for x, brow in zip(row, b):
            if x:
                for j, y in enumerate(brow):
                    if y:
                        acc[j] += x * y
        out.append(tuple(acc))
    return tuple(out)


def mat_vec(a, v):
    if len(a[0]) != len(v):
        raise DimensionMismatch("matrix cols %d, vector length %d" % (len(a[0]), len(v)))
    zero = Fraction(0)
    out = []
    for row in a:
        s = zero
        for x, y in zip(row, v):
            if x and y:
                s += x * y
        out.append(s)
    return tuple(out)


def mat_transpose(a):
    return tuple(zip(*a))


def mat_is_zero(a):
    return all(x == 0 for row in a for x in row)


def _integer_rows(m):
    """Scale each row by the lcm of its denominators (rank/solve invariant)."""
    out = []
    for row in m:
        d = 1
        for e in row:
            d = d * e.denominator // gcd(d, e.denominator)
        out.append([int(e * d) for e in row])
    return out


def mat_rank(m):
    """Rank over the rationals, by fraction-free (Bareiss) elimination."""
    if not m:
        return 0
    rows = _integer_rows(m)
    nr, nc = len(rows), len(rows[0])
    rank = 0
    r = 0
    prev = 1
    for c in range(nc):
        p = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        for i in range(r + 1, nr):
            for j in range(c + 1, nc):
                q, rem = divmod(rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j], prev)
                assert rem == 0, "Bareiss division not exact"
                rows[i][j] = q
            rows[i][c] = 0
        prev = rows[r][c]
        r += 1
        rank += 1
        if r == nr:
            break
    return rank


def mat_inverse(m):
    """Exact inverse: Bareiss forward pass, then exact back substitution."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch("matrix is not square")
    # scale row i by d_i; then m X = I becomes (scaled m) X = diag(d_i)
    aug = []
    for i, row in enumerate(m):
        d = 1
        for e in row:
            d = d * e.denominator // gcd(d, e.denominator)
        aug.append([int(e * d) for e in row] + [d if j == i else 0 for j in range(n)])
    prev = 1
    for k in range(n):
        p = next((i for i in range(k, n) if aug[i][k] != 0), None)
        if p is None:
            raise SingularMatrix("rank < %d" % n)
        if p != k:
            aug[k], aug[p] = aug[p], aug[k]
        for i in range(k + 1, n):
            for j in range(k + 1, 2 * n):
                q, rem = divmod(aug[k][k] * aug[i][j] - aug[i][k] * aug[k][j], prev)
                assert rem == 0, "Bareiss division not exact"
                aug[i][j] = q
            aug[i][k] = 0
        prev = aug[k][k]
    cols = []
    for c in range(n):
        x = [Fraction(0)] * n
        for i in reversed(range(n)):
            s = Fraction(aug[i][n + c])
            for j in range(i + 1, n):
                s -= aug[i][j] * x[j]
            x[i] = s / aug[i][i]
        cols.append(x)
    return tuple(tuple(cols[c][i] for c in range(n)) for i in range(n))


# ---------------------------------------------------------------------------
# rank-3 tensors (tuple of matrices)

def t3(entries):
    return tuple(tuple(tuple(Fraction(e) for e in row) for row in plane) for plane in entries)


def t3_zero(d1, d2=None, d3=None):
    if d2 is None:
        d2 = d1
    if d3 is None:
        d3 = d2
    return tuple(tuple((Fraction(0),) * d3 for _ in range(d2)) for _ in range(d1))


def t3_dims(t):
    return len(t), len(t[0]), len(t[0][0])


def t3_add(a, b):
    if t3_dims(a) != t3_dims(b):
        raise DimensionMismatch("tensor shapes differ")
    return tuple(tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(pa, pb))
                 for pa, pb in zip(a, b))


def t3_sub(a, b):
    if t3_dims(a) != t3_dims(b):
        raise DimensionMismatch("tensor shapes differ")
    return tuple(tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(pa, pb))
                 for pa, pb in zip(a, b))


def t3_neg(a):
    return tuple(tuple(tuple(-x for x in row) for row in plane) for plane in a)


def t3_scale(q, a):
    q = Fraction(q)
    return tuple(tuple(tuple(q * x for x in row) for row in plane) for plane in a)


def t3_is_zero(a):
    return all(x == 0 for plane in a for row in plane for x in row)


def tensor_contract(t, v, slot):
    """Contract vector v into slot 0, 1 or 2 of a rank-3 tensor.

    Returns the matrix indexed by the two remaining slots in order, e.g.
    slot 0 gives out[j][k] = sum_i v[i] t[i][j][k].  For structure constants
    c[i][j][k] the slot-0 contraction with a basis vector e_i lists the
    products e_i . e_j by rows.
    """
    d1, d2, d3 = t3_dims(t)
    zero = Fraction(0)
    if slot == 0:
        if len(v) != d1:
            raise DimensionMismatch("vector length %d, slot dimension %d" % (len(v), d1))
        acc = [[zero] * d3 for _ in range(d2)]
        for vi, plane in zip(v, t):
            if vi:
                for j, row in enumerate(plane):
                    arow = acc[j]
                    for k, x in enumerate(row):
                        if x:
                            arow[k] += vi * x
        return tuple(tuple(row) for row in acc)
    if slot == 1:
        if len(v) != d2:
            raise DimensionMismatch("vector length %d, slot dimension %d" % (len(v), d2))
        out = []
        for plane in t:
            arow = [zero] * d3
            for vj, row in zip(v, plane):
                if vj:
                    for k, x in enumerate(row):
                        if x:
                            arow[k] += vj * x
            out.append(tuple(arow))
        return tuple(out)
    if slot == 2:
        if len(v) != d3:
            raise DimensionMismatch("vector length %d, slot dimension %d" % (len(v), d3))
        out = []
        for plane in t:
            arow = [zero] * d2
            for j, row in enumerate(plane):
                s = zero
                for vk, x in zip(v, row):
                    if vk and x:
                        s += vk * x
                arow[j] = s
            out.append(tuple(arow))
        return tuple(out)
    raise DimensionMismatch("slot must be 0, 1 or 2, got %r" % (slot,))


def rational_sqrt(q):
    """Exact square root of a Fraction, or None if q is not a square in Q."""
    q = Fraction(q)
    if q < 0:
        return None
    rn = isqrt(q.numerator)
    if rn * rn != q.numerator:
        return None
    rd = isqrt(q.denominator)
    if rd * rd != q.denominator:
        return None
    return Fraction(rn, rd)
