"""Face operators and low-dimensional homology of the complex of matrix pairs over F_q.

Over a field every class is a system, and classes of arity n correspond to RREF
matrices with n columns, so ``L_n(F_q)`` can be enumerated outright. Chains in
degree n are formal sums of nondegenerate classes of arity n + 1.

Boundary matrices use the row convention: row ``g`` of ``D_n`` is the boundary
of generator ``g``, so ``x -> x @ D_n`` is the boundary map on row vectors and
``D_{n+1} @ D_n`` is the composite. ``D_0`` is the augmentation (a column of
ones).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import ScaleCapExceeded
from .linalg import smith_normal_form, solve_left
from .matrix import Matrix, hstack
from .pairs import MatrixPair, canonical_form
from .rings import ZZ, F, RingSpec

MAX_ARITY = 3
MAX_Q = 31


@dataclass(frozen=True)
class ClassKey:
    """A class of ``L_arity(F_q)``, stored as its canonical RREF matrix."""
    ring: RingSpec
    rref: Matrix

    @property
    def arity(self) -> int:
        return self.rref.cols

    @property
    def q(self) -> int:
        return self.ring.modulus

    def pair(self) -> MatrixPair:
        return MatrixPair.system(self.rref)

    def __str__(self):
        n = self.arity
        if self.rref.rows == 0:
            return f"1_{n}"
        if self.rref.rows == n:
            return f"0_{n}"
        return "[" + "; ".join(",".join(str(x) for x in self.rref.row(i)) for i in range(self.rref.rows)) + "]"


def key_of(p: MatrixPair) -> ClassKey:
    return ClassKey(p.ring, canonical_form(p))


def system_key(ring: RingSpec, rows) -> ClassKey:
    """Key of the system with the given coefficient rows, e.g. ``[[1, s, r]]``."""
    cols = len(rows[0]) if rows else 0
    return key_of(MatrixPair.system(Matrix(ring, rows, len(rows), cols)))


def _check_scale(q: int, arity: int):
    if arity > MAX_ARITY or q > MAX_Q:
        raise ScaleCapExceeded(f"enumeration is capped at arity {MAX_ARITY} and q <= {MAX_Q}")


@lru_cache(maxsize=None)
def enumerate_classes(q: int, arity: int) -> tuple[ClassKey, ...]:
    """Every RREF matrix with ``arity`` columns over F_q, one per class."""
    _check_scale(q, arity)
    ring = F(q)
    out = []
    for r in range(arity + 1):
        for pivots in itertools.combinations(range(arity), r):
            # free slots: right of the row's pivot, outside pivot columns
            free = [(i, j) for i, p in enumerate(pivots) for j in range(p + 1, arity) if j not in pivots]
            for values in itertools.product(range(q), repeat=len(free)):
                rows = [[0] * arity for _ in range(r)]
                for i, p in enumerate(pivots):
                    rows[i][p] = 1
                for (i, j), v in zip(free, values):
                    rows[i][j] = v
                out.append(ClassKey(ring, Matrix(ring, rows, r, arity)))
    return tuple(out)


# faces on pairs

def face_N_pair(p: MatrixPair, i: int) -> MatrixPair:
    """Bottom face ``[B | A^_i]``."""
    return MatrixPair(p.B, p.A.delete_column(i))


def face_E_pair(p: MatrixPair, i: int) -> MatrixPair:
    """Top face ``[B, A_i | A^_i]``."""
    return MatrixPair(hstack(p.B, p.A.column(i)), p.A.delete_column(i))


def face_N(c: ClassKey, i: int) -> ClassKey:
    return key_of(face_N_pair(c.pair(), i))


def face_E(c: ClassKey, i: int) -> ClassKey:
    return key_of(face_E_pair(c.pair(), i))


def is_degenerate(c: ClassKey) -> bool:
    if c.arity < 2:
        raise ValueError("degeneracy is defined for arity at least 2")
    return any(face_E(c, i) == face_N(c, i) for i in range(c.arity))


@lru_cache(maxsize=None)
def chain_basis(q: int, n: int) -> tuple[ClassKey, ...]:
    """Generators of ``C_n``: nondegenerate classes of arity n + 1 (all classes for n = 0)."""
    classes = enumerate_classes(q, n + 1)
    if n == 0:
        return classes
    return tuple(c for c in classes if not is_degenerate(c))


def boundary(c: ClassKey) -> dict:
    """``sum_i (-1)^i (E_i - N_i)`` as a map from basis keys to coefficients, degenerate faces dropped."""
    out = {}
    for i in range(c.arity):
        sign = -1 if i % 2 else 1
        for face, s in ((face_E(c, i), sign), (face_N(c, i), -sign)):
            out[face] = out.get(face, 0) + s
    if c.arity - 1 >= 2:
        out = {k: v for k, v in out.items() if not is_degenerate(k)}
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def boundary_matrix(q: int, n: int) -> Matrix:
    """Integer matrix of ``C_n -> C_{n-1}`` (``n = 0`` gives the augmentation)."""
    rows_basis = chain_basis(q, n)
    if n == 0:
        return Matrix(ZZ, [[1] for _ in rows_basis], len(rows_basis), 1)
    cols_basis = chain_basis(q, n - 1)
    index = {k: j for j, k in enumerate(cols_basis)}
    data = []
    for c in rows_basis:
        row = [0] * len(cols_basis)
        for k, v in boundary(c).items():
            row[index[k]] += v
        data.append(row)
    return Matrix(ZZ, data, len(rows_basis), len(cols_basis))


@dataclass(frozen=True)
class HomologyResult:
    free_rank: int
    torsion: tuple[int, ...] = ()

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` when infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " (+) ".join(parts) or "0"


def abelian_group(relations: Matrix) -> HomologyResult:
    """``Z^cols`` modulo the row space of an integer relation matrix."""
    diag = smith_normal_form(relations).diagonal
    nonzero = [d for d in diag if d != 0]
    return HomologyResult(relations.cols - len(nonzero), tuple(d for d in nonzero if d > 1))


def cycles_basis(D: Matrix) -> Matrix:
    """Rows spanning the left kernel ``{x : x D = 0}`` over Z."""
    snf = smith_normal_form(D)
    r = sum(1 for d in snf.diagonal if d != 0)
    return snf.P.submatrix(rows=range(r, D.rows))


def homology_of(D_out: Matrix, D_in: Matrix) -> HomologyResult:
    """``ker(x -> x D_out) / rowspace(D_in)`` over Z."""
    K = cycles_basis(D_out)
    if K.rows == 0:
        return HomologyResult(0)
    Y = solve_left(K.T, D_in.T)  # D_in = Y^T K
    if Y is None:
        raise ArithmeticError("boundaries are not cycles; the complex is broken")
    return abelian_group(Y.T)


def homology(q: int, n: int) -> HomologyResult:
    """``H_n(F_q)`` for ``n`` in {0, 1}."""
    if n not in (0, 1):
        raise ValueError("homology is implemented in dimensions 0 and 1")
    return homology_of(boundary_matrix(q, n), boundary_matrix(q, n + 1))


def presentation_h1(q: int) -> HomologyResult:
    """The group on ``[1, r]``, r a unit, modulo the two boundary families."""
    _check_scale(q, 2)
    ring = F(q)
    units = list(range(1, q))
    idx = {r: i for i, r in enumerate(units)}
    rels = []
    for r in units:
        for s in units:
            si = ring.inv(s)
            row = [0] * len(units)
            row[idx[r]] += 1
            row[idx[s]] -= 1
            row[idx[si * r % q]] -= 1
            rels.append(row)
            row = [0] * len(units)
            row[idx[s]] += 1
            row[idx[r]] -= 1
            row[idx[-r * si % q]] += 1
            rels.append(row)
    return abelian_group(Matrix(ZZ, rels, len(rels), len(units)))


def clear_caches():
    """Forget memoized enumerations (used to time computations from scratch)."""
    for f in (enumerate_classes, chain_basis, boundary_matrix):
        f.cache_clear()


def expected_h1_order(q: int) -> int:
    from math import gcd
    return (q - 1) // gcd(2, q - 1)


__all__ = [
    "ClassKey", "HomologyResult", "key_of", "system_key", "enumerate_classes", "face_N", "face_E",
    "face_N_pair", "face_E_pair", "is_degenerate", "chain_basis", "boundary", "boundary_matrix",
    "abelian_group", "cycles_basis", "homology_of", "homology", "presentation_h1", "expected_h1_order",
    "clear_caches",
]
