"""K0 of finitely presented modules, the Goursat groups, and the maps between them.

A matrix ``A`` (m x n) presents ``M_A = coker(R^m -> R^n, x -> xA)``: columns
are generators, rows are relations. Over a field ``M_A`` is determined by its
dimension ``n - rank A``; over the integers by the Smith normal form.

Equality in K0 is decided by collapsing each symbol ``{A}`` to a sum of
indecomposables (``R`` and ``Z/p^e``), which is a basis of K0 for the supported
rings. Equality in the Goursat groups is decided by transport through ``gamma``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import sympy

from .errors import DimensionMismatch, ParseError, UnsupportedRing
from .linalg import rank, smith_normal_form
from .matrix import Matrix, block, hstack, parse_matrix_at
from .pairs import MatrixPair, parse_pair_at
from .rings import INTEGERS, RingSpec


class FormalSum:
    """Element of a free abelian group on hashable generator keys."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        out = {}
        for key, coef in (terms.items() if isinstance(terms, dict) else (terms or ())):
            out[key] = out.get(key, 0) + int(coef)
        self._terms = {k: c for k, c in out.items() if c}

    @classmethod
    def of(cls, key, coef: int = 1) -> "FormalSum":
        return cls({key: coef})

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, key) -> int:
        return self._terms.get(key, 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __add__(self, other: "FormalSum") -> "FormalSum":
        out = dict(self._terms)
        for k, c in other.items():
            out[k] = out.get(k, 0) + c
        return FormalSum(out)

    def __neg__(self):
        return FormalSum({k: -c for k, c in self.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, n: int):
        return FormalSum({k: n * c for k, c in self.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def map_keys(self, f) -> "FormalSum":
        """Linear extension of ``key -> f(key)`` where ``f`` returns a FormalSum."""
        out = FormalSum()
        for k, c in self.items():
            out = out + f(k) * c
        return out

    def format(self) -> str:
        return "\n".join(f"{c} {k}" for k, c in sorted(self.items(), key=lambda kc: str(kc[0])))

    def __repr__(self):
        return "FormalSum(" + ", ".join(f"{c}*{k}" for k, c in self.items()) + ")"


def parse_formal_sum(text: str, ring: RingSpec) -> FormalSum:
    """Parse lines ``<coef> <key>``; keys are matrices or pairs in the text format."""
    terms = []
    offset = 0
    for line in text.splitlines(keepends=True):
        body = line.split("#", 1)[0].strip()
        if body:
            coef_text, _, rest = body.partition(" ")
            try:
                coef = int(coef_text)
            except ValueError:
                raise ParseError(f"bad coefficient {coef_text!r}", text, offset) from None
            rest = rest.strip()
            if rest.startswith("["):
                key, end = parse_pair_at(rest, 0, ring)
            else:
                key, end = parse_matrix_at(rest, 0, ring)
            if rest[end:].strip():
                raise ParseError("trailing characters after generator key", text, offset)
            terms.append((key, coef))
        offset += len(line)
    return FormalSum(terms)


# module invariants

@dataclass(frozen=True)
class ModuleInvariant:
    """Isomorphism type of ``M_A``: free rank plus invariant factors (empty over a field)."""
    ring: RingSpec
    free_rank: int
    invariant_factors: tuple[int, ...] = ()

    @property
    def dimension(self) -> int:
        return self.free_rank

    def components(self) -> Counter:
        """Multiset of indecomposable summands: ``"R"`` and ``"Z/p^e"`` strings."""
        out = Counter()
        if self.free_rank:
            out["R"] = self.free_rank
        for d in self.invariant_factors:
            for p, e in sympy.factorint(d).items():
                out[f"Z/{p}^{e}"] += 1
        return out

    def __str__(self):
        parts = []
        if self.free_rank:
            base = "Z" if self.ring.kind == INTEGERS else str(self.ring)
            parts.append(base if self.free_rank == 1 else f"{base}^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.invariant_factors]
        return " (+) ".join(parts) or "0"


def _check_ring(ring: RingSpec):
    if not (ring.is_field or ring.kind == INTEGERS):
        raise UnsupportedRing(f"module invariants are implemented over fields and Z, not {ring}")


def module_invariant(A: Matrix) -> ModuleInvariant:
    ring = A.ring
    _check_ring(ring)
    if ring.is_field:
        return ModuleInvariant(ring, A.cols - rank(A))
    diag = smith_normal_form(A).diagonal
    nonzero = [d for d in diag if d != 0]
    return ModuleInvariant(ring, A.cols - len(nonzero), tuple(d for d in nonzero if d > 1))


def lickorish_equivalent(A: Matrix, A2: Matrix) -> bool:
    return module_invariant(A) == module_invariant(A2)


# the four moves, used to test invariance

def move_add_zero_row(A: Matrix) -> Matrix:
    return block([[A], [Matrix.zeros(A.ring, 1, A.cols)]])


def move_stabilize(A: Matrix) -> Matrix:
    """``C -> [C 0; 0 1]``."""
    ring = A.ring
    return block([[A, Matrix.zeros(ring, A.rows, 1)],
                  [Matrix.zeros(ring, 1, A.cols), Matrix.identity(ring, 1)]])


def move_permute(A: Matrix, row_perm=None, col_perm=None) -> Matrix:
    return A.submatrix(rows=row_perm, cols=col_perm)


def move_add_row(A: Matrix, src: int, dst: int, r) -> Matrix:
    """Add ``r`` times row ``src`` to row ``dst``."""
    rows = A.tolist()
    rows[dst] = [A.ring.reduce(a + A.ring(r) * b) for a, b in zip(rows[dst], rows[src])]
    return Matrix(A.ring, rows, A.rows, A.cols)


def move_add_col(A: Matrix, src: int, dst: int, r) -> Matrix:
    return move_add_row(A.T, src, dst, r).T


# K0

def collapse(x: FormalSum) -> dict:
    """Image of a formal sum of matrices in the free group on indecomposables."""
    out = Counter()
    for A, c in x.items():
        for comp, mult in module_invariant(A).components().items():
            out[comp] += c * mult
    return {k: v for k, v in out.items() if v}


def k0_equal(x: FormalSum, y: FormalSum) -> bool:
    return collapse(x) == collapse(y)


def gamma(p: MatrixPair) -> FormalSum:
    """``[B | A] -> {B, A} - {B}``."""
    return FormalSum.of(hstack(p.B, p.A)) - FormalSum.of(p.B)


def gamma_sum(x: FormalSum) -> FormalSum:
    return x.map_keys(gamma)


def iota(x: FormalSum) -> FormalSum:
    """``G0 -> G``: unary generators are already generators of G."""
    return x


def kappa(A: Matrix) -> FormalSum:
    """``{A} -> sum_i [A_1, ..., A_{i-1} | A_i]`` over the columns of A."""
    terms = []
    for i in range(A.cols):
        terms.append((MatrixPair(A.submatrix(cols=range(i)), A.column(i)), 1))
    return FormalSum(terms)


def kappa_sum(x: FormalSum) -> FormalSum:
    return x.map_keys(kappa)


def triangle_check(A: Matrix) -> bool:
    """Going once around ``K0 -> G0 -> G -> K0`` returns ``{A}``."""
    _check_ring(A.ring)
    return k0_equal(gamma_sum(iota(kappa(A))), FormalSum.of(A))


def g0_equal(x: FormalSum, y: FormalSum) -> bool:
    """Equality in G0 of sums of unary pairs, via the isomorphism ``gamma o iota``."""
    for p in list(x.keys()) + list(y.keys()):
        if not isinstance(p, MatrixPair) or p.arity != 1:
            raise ValueError("G0 generators are unary matrix pairs")
        _check_ring(p.ring)
    return k0_equal(gamma_sum(iota(x)), gamma_sum(iota(y)))


def g0_relation(B: Matrix, A: Matrix, A2: Matrix) -> FormalSum:
    """``[B, A | A'] - [B | A'] - [B, A' | A] + [B | A]``, zero in G0."""
    return FormalSum([
        (MatrixPair(hstack(B, A), A2), 1),
        (MatrixPair(B, A2), -1),
        (MatrixPair(hstack(B, A2), A), -1),
        (MatrixPair(B, A), 1),
    ])


def positive_cone_element(A: Matrix, B: Matrix, C: Matrix) -> FormalSum:
    """``{A} - {[A 0; B C]} + {C}``."""
    if A.cols != B.cols:
        raise DimensionMismatch(f"A and B need equal column counts, got {A.cols} and {B.cols}")
    if B.rows != C.rows:
        raise DimensionMismatch(f"B and C need equal row counts, got {B.rows} and {C.rows}")
    big = block([[A, Matrix.zeros(A.ring, A.rows, C.cols)], [B, C]])
    return FormalSum([(A, 1), (big, -1), (C, 1)])


def dim_character(x: FormalSum) -> int:
    """Linear extension of ``rho{A}`` = dimension (fields) or free rank (Z) of ``M_A``."""
    return sum(c * module_invariant(A).free_rank for A, c in x.items())


__all__ = [
    "FormalSum", "ModuleInvariant", "module_invariant", "lickorish_equivalent", "collapse",
    "k0_equal", "gamma", "gamma_sum", "iota", "kappa", "kappa_sum", "triangle_check", "g0_equal",
    "g0_relation", "positive_cone_element", "dim_character", "parse_formal_sum", "move_add_zero_row",
    "move_stabilize", "move_permute", "move_add_row", "move_add_col",
]
