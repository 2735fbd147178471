"""Exact matrix kernel: RREF, Smith normal form, left solving, generalized inverses.

All routines are pure; they copy their input into Python lists, work in place
on the copies and return fresh :class:`Matrix` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DimensionMismatch, NotAField, NotEuclidean, RingMismatch, UnsupportedRing
from .matrix import Matrix, hstack
from .rings import INTEGERS, MOD_RING, ZZ, RingSpec


@dataclass(frozen=True)
class RREF:
    R: Matrix
    P: Matrix
    rank: int
    pivots: tuple[int, ...]

    def __iter__(self):
        # allows ``R, P, rank = rref(M)``
        return iter((self.R, self.P, self.rank))


def rref(M: Matrix) -> RREF:
    """Reduced row-echelon form of ``M`` over a field, zero rows deleted.

    Returns ``R``, ``P`` and the rank, with ``P @ M == R``. The pivot in each
    column is the first nonzero entry at or below the current row, so the
    output is the unique RREF of the row space of ``M``.
    """
    ring = M.ring
    if not ring.is_field:
        raise NotAField(f"rref needs a field, got {ring}")
    m, n = M.shape
    red, inv = ring.reduce, ring.inv
    # augmented rows [M | I_m]
    rows = [list(M.row(i)) + [ring.one if j == i else ring.zero for j in range(m)] for i in range(m)]
    width = n + m
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = inv(rows[r][c])
        if s != 1:
            rows[r] = [red(s * x) for x in rows[r]]
        pr = rows[r]
        for i in range(m):
            f = rows[i][c]
            if i != r and f != 0:
                ri = rows[i]
                rows[i] = [red(ri[j] - f * pr[j]) for j in range(width)]
        pivots.append(c)
        r += 1
    R = Matrix._raw(ring, tuple(tuple(rows[i][:n]) for i in range(r)), r, n)
    P = Matrix._raw(ring, tuple(tuple(rows[i][n:]) for i in range(r)), r, m)
    return RREF(R, P, r, tuple(pivots))


def rank(M: Matrix) -> int:
    if M.ring.is_field:
        return rref(M).rank
    if M.ring.is_euclidean:
        D = smith_normal_form(M).D
        return sum(1 for i in range(min(D.shape)) if D[i, i] != 0)
    raise UnsupportedRing(f"rank is not defined over {M.ring}")


def pivot_selector(ring: RingSpec, pivots, ncols: int) -> Matrix:
    """The ``ncols x r`` 0/1 matrix ``S`` with ``R @ S == I_r`` for an RREF ``R``."""
    data = [[ring.zero] * len(pivots) for _ in range(ncols)]
    for j, c in enumerate(pivots):
        data[c][j] = ring.one
    return Matrix(ring, data, ncols, len(pivots))


# Smith normal form

@dataclass(frozen=True)
class SNF:
    D: Matrix
    P: Matrix
    Q: Matrix
    P_inv: Matrix
    Q_inv: Matrix

    def __iter__(self):
        # allows ``D, P, Q = smith_normal_form(M)``
        return iter((self.D, self.P, self.Q))

    @property
    def diagonal(self) -> list:
        return [self.D[i, i] for i in range(min(self.D.shape))]


def _norm(ring: RingSpec, x):
    if ring.kind == INTEGERS:
        return abs(x)
    return 0 if x == 0 else 1


def _quo(ring: RingSpec, a, b):
    if ring.kind == INTEGERS:
        return a // b
    return ring.reduce(a * ring.inv(b))


def smith_normal_form(M: Matrix) -> SNF:
    """Smith normal form ``P @ M @ Q == D`` over a Euclidean ring.

    ``D`` is diagonal with ``d1 | d2 | ...``; over the integers the diagonal is
    nonnegative, over fields it consists of ones then zeros. Both transforms
    and their inverses are returned.
    """
    ring = M.ring
    if not ring.is_euclidean:
        raise NotEuclidean(f"Smith normal form needs a Euclidean ring, got {ring}")
    m, n = M.shape
    red = ring.reduce
    zero, one = ring.zero, ring.one
    D = [list(M.row(i)) for i in range(m)]
    P = [[one if i == j else zero for j in range(m)] for i in range(m)]
    Pi = [r[:] for r in P]
    Q = [[one if i == j else zero for j in range(n)] for i in range(n)]
    Qi = [r[:] for r in Q]

    def row_add(i, j, c):  # row_i += c * row_j
        D[i] = [red(a + c * b) for a, b in zip(D[i], D[j])]
        P[i] = [red(a + c * b) for a, b in zip(P[i], P[j])]
        for r in Pi:
            r[j] = red(r[j] - c * r[i])

    def row_swap(i, j):
        D[i], D[j] = D[j], D[i]
        P[i], P[j] = P[j], P[i]
        for r in Pi:
            r[i], r[j] = r[j], r[i]

    def row_scale(i, u):
        D[i] = [red(u * a) for a in D[i]]
        P[i] = [red(u * a) for a in P[i]]
        ui = ring.inv(u)
        for r in Pi:
            r[i] = red(r[i] * ui)

    def col_add(i, j, c):  # col_i += c * col_j
        for r in D:
            r[i] = red(r[i] + c * r[j])
        for r in Q:
            r[i] = red(r[i] + c * r[j])
        Qi[j] = [red(a - c * b) for a, b in zip(Qi[j], Qi[i])]

    def col_swap(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in Q:
            r[i], r[j] = r[j], r[i]
        Qi[i], Qi[j] = Qi[j], Qi[i]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] != 0 and (best is None or _norm(ring, D[i][j]) < best[0]):
                    best = (_norm(ring, D[i][j]), i, j)
        if best is None:
            break
        _, i, j = best
        if i != t:
            row_swap(i, t)
        if j != t:
            col_swap(j, t)
        while True:
            clean = True
            for i in range(t + 1, m):
                if D[i][t] != 0:
                    row_add(i, t, -_quo(ring, D[i][t], D[t][t]))
                    if D[i][t] != 0:
                        clean = False
            for j in range(t + 1, n):
                if D[t][j] != 0:
                    col_add(j, t, -_quo(ring, D[t][j], D[t][t]))
                    if D[t][j] != 0:
                        clean = False
            if not clean:
                # a smaller remainder appeared in row/column t: make it the pivot
                cand = [(_norm(ring, D[i][t]), i, t) for i in range(t + 1, m) if D[i][t] != 0]
                cand += [(_norm(ring, D[t][j]), t, j) for j in range(t + 1, n) if D[t][j] != 0]
                _, i, j = min(cand)
                if i != t:
                    row_swap(i, t)
                if j != t:
                    col_swap(j, t)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if red(D[i][j]) != 0 and _quo_rem_nonzero(ring, D[i][j], D[t][t])), None)
            if bad is None:
                break
            row_add(t, bad[0], one)
        d = D[t][t]
        if ring.kind == INTEGERS and d < 0:
            row_scale(t, -1)
        elif ring.is_field and d != one:
            row_scale(t, ring.inv(d))

    def mk(rows, r, c):
        return Matrix._raw(ring, tuple(tuple(x) for x in rows), r, c)

    return SNF(mk(D, m, n), mk(P, m, m), mk(Q, n, n), mk(Pi, m, m), mk(Qi, n, n))


def _quo_rem_nonzero(ring, a, b) -> bool:
    if ring.kind == INTEGERS:
        return a % b != 0
    return False


def invariant_factors(M: Matrix) -> list:
    """Nonzero diagonal of the Smith form (including unit factors)."""
    return [d for d in smith_normal_form(M).diagonal if d != 0]


# linear solving

def _check_pair(B: Matrix, A: Matrix):
    if B.ring != A.ring:
        raise RingMismatch(f"{B.ring} vs {A.ring}")
    if B.rows != A.rows:
        raise DimensionMismatch(f"row counts differ: {B.rows} vs {A.rows}")


def solve_left(B: Matrix, A: Matrix) -> Matrix | None:
    """Return some ``W`` with ``B @ W == A``, or ``None`` when no solution exists."""
    _check_pair(B, A)
    ring = B.ring
    if ring.is_field:
        return _solve_field(B, A)
    if ring.kind == INTEGERS:
        return _solve_snf(B, A, None)
    if ring.kind == MOD_RING:
        return _solve_snf(B, A, ring.modulus)
    raise UnsupportedRing(f"cannot solve linear systems over {ring}")


def _solve_field(B: Matrix, A: Matrix) -> Matrix | None:
    ring = B.ring
    k, n = B.cols, A.cols
    res = rref(hstack(B, A))
    W = [[ring.zero] * n for _ in range(k)]
    for r, c in enumerate(res.pivots):
        if c >= k:
            return None  # pivot in the A block: inconsistent
        W[c] = list(res.R.row(r)[k:])
    return Matrix._raw(ring, tuple(tuple(r) for r in W), k, n)


def _solve_snf(B: Matrix, A: Matrix, modulus: int | None) -> Matrix | None:
    """Integer SNF route; ``modulus`` set means congruences mod n on an integer lift."""
    ring = B.ring
    Bz = B if modulus is None else B.map(ZZ, int)
    Az = A if modulus is None else A.map(ZZ, int)
    snf = smith_normal_form(Bz)
    C = snf.P @ Az  # need D @ Y == C, then W = Q @ Y
    m, k, n = B.rows, B.cols, A.cols
    diag = snf.diagonal
    Y = [[0] * n for _ in range(k)]
    for i in range(m):
        d = diag[i] if i < len(diag) else 0
        for j in range(n):
            c = C[i, j]
            if modulus is None:
                if d == 0:
                    if c != 0:
                        return None
                elif c % d:
                    return None
                else:
                    Y[i][j] = c // d
            else:
                y = _solve_congruence(d, c, modulus)
                if y is None:
                    return None
                if i < k:
                    Y[i][j] = y
    Yz = Matrix._raw(ZZ, tuple(tuple(r) for r in Y), k, n)
    W = snf.Q @ Yz
    return W if modulus is None else W.map(ring, int)


def _solve_congruence(d: int, c: int, n: int) -> int | None:
    """Smallest ``y`` in ``[0, n)`` with ``d*y == c (mod n)``, or ``None``."""
    d, c = d % n, c % n
    g = gcd(d, n)
    if c % g:
        return None
    if d == 0:
        return 0
    n2 = n // g
    return (c // g) * pow(d // g, -1, n2) % n2


def generalized_inverse(B: Matrix) -> Matrix:
    """A matrix ``C`` with ``B @ C @ B == B`` over a field.

    Uses the full-rank factorization ``B = F @ R`` with ``R`` the RREF of ``B``
    and ``F`` the pivot columns of ``B``: the RREF transform is a left inverse
    of ``F`` and the pivot selector a right inverse of ``R``.
    """
    ring = B.ring
    if not ring.is_field:
        raise NotAField(f"generalized inverse needs a field, got {ring}")
    res = rref(B)
    return pivot_selector(ring, res.pivots, B.cols) @ res.P


def row_space_contains(basis_rref: RREF, M: Matrix) -> Matrix | None:
    """Return ``X`` with ``X @ R == M`` when every row of ``M`` lies in the row space of ``R``."""
    R = basis_rref.R
    X = M @ pivot_selector(M.ring, basis_rref.pivots, M.cols)
    return X if X @ R == M else None
