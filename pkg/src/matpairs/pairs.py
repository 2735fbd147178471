"""Matrix pairs ``(B | A)``, certified divisibility rewriting and the lattice L_n(R).

A pair ``(B | A)`` with ``B`` of shape m x k and ``A`` of shape m x n reads
"B divides A on the left". The pre-order is witnessed by a certificate
``(U, V, G)`` with ``U @ B == B' @ V`` and ``U @ A == A' + B' @ G``. Every
rewrite below returns a :class:`CertifiedRelation` that carries such a witness,
so results can be rechecked with :func:`verify` over any supported ring.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field

from .errors import (
    ArityMismatch,
    ChainMismatch,
    DimensionMismatch,
    NotAField,
    NotEuclidean,
    ParseError,
    RingMismatch,
    ScaleCapExceeded,
    UnsupportedHom,
)
from .linalg import generalized_inverse, rref, row_space_contains, smith_normal_form, solve_left
from .matrix import Matrix, block, hstack, parse_matrix_at, vstack
from .rings import INTEGERS, MOD_RING, PRIME_FIELD, RATIONALS, RingSpec


@dataclass(frozen=True)
class MatrixPair:
    B: Matrix
    A: Matrix

    def __post_init__(self):
        if self.B.ring != self.A.ring:
            raise RingMismatch(f"B over {self.B.ring}, A over {self.A.ring}")
        if self.B.rows != self.A.rows:
            raise DimensionMismatch(f"B has {self.B.rows} rows but A has {self.A.rows}")

    @classmethod
    def system(cls, A: Matrix) -> "MatrixPair":
        """The homogeneous system ``(0 | A)``, stored with a width-0 left matrix."""
        return cls(Matrix.zeros(A.ring, A.rows, 0), A)

    @classmethod
    def top(cls, ring: RingSpec, n: int) -> "MatrixPair":
        return cls(Matrix.identity(ring, 1), Matrix.zeros(ring, 1, n))

    @classmethod
    def bottom(cls, ring: RingSpec, n: int) -> "MatrixPair":
        return cls.system(Matrix.identity(ring, n))

    @property
    def ring(self) -> RingSpec:
        return self.A.ring

    @property
    def arity(self) -> int:
        return self.A.cols

    @property
    def is_system(self) -> bool:
        return self.B.is_zero()

    def __str__(self):
        return format_pair(self)


@dataclass(frozen=True)
class Certificate:
    U: Matrix
    V: Matrix
    G: Matrix

    def __str__(self):
        return format_certificate(self)


def _check_shapes(c: Certificate, src: MatrixPair, dst: MatrixPair):
    if src.ring != dst.ring or c.U.ring != src.ring or c.V.ring != src.ring or c.G.ring != src.ring:
        raise RingMismatch("certificate and pairs must share one ring")
    if src.arity != dst.arity:
        raise ArityMismatch(f"arity {src.arity} vs {dst.arity}")
    m, k, n = src.B.rows, src.B.cols, src.arity
    m2, k2 = dst.B.rows, dst.B.cols
    expected = {"U": (m2, m), "V": (k2, k), "G": (k2, n)}
    for name, shape in expected.items():
        got = getattr(c, name).shape
        if got != shape:
            raise DimensionMismatch(f"certificate {name} has shape {got}, expected {shape}")


def verify(c: Certificate, src: MatrixPair, dst: MatrixPair) -> bool:
    """Check ``U B = B' V`` and ``U A = A' + B' G`` entrywise.

    Shape problems raise :class:`DimensionMismatch`; a well-shaped certificate
    that fails the equations returns ``False``.
    """
    _check_shapes(c, src, dst)
    return c.U @ src.B == dst.B @ c.V and c.U @ src.A == dst.A + dst.B @ c.G


@dataclass(frozen=True)
class CertifiedRelation:
    source: MatrixPair
    target: MatrixPair
    cert: Certificate

    def verify(self) -> bool:
        return verify(self.cert, self.source, self.target)


def identity_relation(p: MatrixPair) -> CertifiedRelation:
    ring, m, k, n = p.ring, p.B.rows, p.B.cols, p.arity
    cert = Certificate(Matrix.identity(ring, m), Matrix.identity(ring, k), Matrix.zeros(ring, k, n))
    return CertifiedRelation(p, p, cert)


# Rules of Divisibility

def rod_left_multiply(p: MatrixPair, U: Matrix) -> CertifiedRelation:
    """``(B | A) <= (UB | UA)``."""
    if U.cols != p.B.rows:
        raise DimensionMismatch(f"U must have {p.B.rows} columns, has {U.cols}")
    ring, k, n = p.ring, p.B.cols, p.arity
    target = MatrixPair(U @ p.B, U @ p.A)
    return CertifiedRelation(p, target, Certificate(U, Matrix.identity(ring, k), Matrix.zeros(ring, k, n)))


def rod_right_multiply(p: MatrixPair, V: Matrix) -> CertifiedRelation:
    """``(BV | A) <= (B | A)``."""
    if V.rows != p.B.cols:
        raise DimensionMismatch(f"V must have {p.B.cols} rows, has {V.rows}")
    ring, m, k, n = p.ring, p.B.rows, p.B.cols, p.arity
    source = MatrixPair(p.B @ V, p.A)
    return CertifiedRelation(source, p, Certificate(Matrix.identity(ring, m), V, Matrix.zeros(ring, k, n)))


def rod_translate(p: MatrixPair, G: Matrix) -> CertifiedRelation:
    """``(B | A + BG) <= (B | A)``."""
    if G.shape != (p.B.cols, p.arity):
        raise DimensionMismatch(f"G must be {p.B.cols}x{p.arity}, is {G.rows}x{G.cols}")
    ring, m, k = p.ring, p.B.rows, p.B.cols
    source = MatrixPair(p.B, p.A + p.B @ G)
    return CertifiedRelation(source, p, Certificate(Matrix.identity(ring, m), Matrix.identity(ring, k), G))


def compose(r1: CertifiedRelation, r2: CertifiedRelation) -> CertifiedRelation:
    """Transitivity: ``U = U2 U1``, ``V = V2 V1``, ``G = G2 + V2 G1``."""
    if r1.target != r2.source:
        raise ChainMismatch("first relation's target differs from second relation's source")
    c1, c2 = r1.cert, r2.cert
    cert = Certificate(c2.U @ c1.U, c2.V @ c1.V, c2.G + c2.V @ c1.G)
    return CertifiedRelation(r1.source, r2.target, cert)


def compose_all(*rels: CertifiedRelation) -> CertifiedRelation:
    out = rels[0]
    for r in rels[1:]:
        out = compose(out, r)
    return out


def decompose(rel: CertifiedRelation) -> tuple[CertifiedRelation, CertifiedRelation, CertifiedRelation]:
    """Split a certificate into one move of each rule whose composite is ``rel``.

    ``(B|A) <= (UB|UA) = (B'V | A'+B'G) <= (B' | A'+B'G) <= (B'|A')``.
    """
    if not rel.verify():
        raise ValueError("cannot decompose a certificate that does not verify")
    c, dst = rel.cert, rel.target
    r1 = rod_left_multiply(rel.source, c.U)
    mid = MatrixPair(dst.B, dst.A + dst.B @ c.G)
    r2 = rod_right_multiply(mid, c.V)
    r3 = rod_translate(dst, c.G)
    return r1, r2, r3


# lattice operations

def _same_arity(p: MatrixPair, q: MatrixPair):
    if p.ring != q.ring:
        raise RingMismatch(f"{p.ring} vs {q.ring}")
    if p.arity != q.arity:
        raise ArityMismatch(f"arity {p.arity} vs {q.arity}")


def meet(p: MatrixPair, q: MatrixPair) -> MatrixPair:
    """Infimum ``[B 0 | A ; 0 B' | A']``."""
    return meet_with_projections(p, q)[0]


def meet_with_projections(p: MatrixPair, q: MatrixPair):
    """The meet together with certified relations ``meet <= p`` and ``meet <= q``."""
    _same_arity(p, q)
    ring = p.ring
    m, k, m2, k2, n = p.B.rows, p.B.cols, q.B.rows, q.B.cols, p.arity
    Z = Matrix.zeros
    left = block([[p.B, Z(ring, m, k2)], [Z(ring, m2, k), q.B]])
    w = MatrixPair(left, vstack(p.A, q.A))
    to_p = Certificate(hstack(Matrix.identity(ring, m), Z(ring, m, m2)),
                       hstack(Matrix.identity(ring, k), Z(ring, k, k2)),
                       Z(ring, k, n))
    to_q = Certificate(hstack(Z(ring, m2, m), Matrix.identity(ring, m2)),
                       hstack(Z(ring, k2, k), Matrix.identity(ring, k2)),
                       Z(ring, k2, n))
    return w, CertifiedRelation(w, p, to_p), CertifiedRelation(w, q, to_q)


def dual(p: MatrixPair) -> MatrixPair:
    """``[B | A]* = [B^T 0 ; A^T I_n]`` (the opposite ring is the ring itself here)."""
    ring, k, n = p.ring, p.B.cols, p.arity
    return MatrixPair(vstack(p.B.T, p.A.T), vstack(Matrix.zeros(ring, k, n), Matrix.identity(ring, n)))


def dual_relation(rel: CertifiedRelation) -> CertifiedRelation:
    """Order reversal: from ``p <= q`` build ``dual(q) <= dual(p)``."""
    c = rel.cert
    ring, n = rel.source.ring, rel.source.arity
    k, k2 = rel.source.B.cols, rel.target.B.cols
    m = rel.source.B.rows
    U = block([[c.V.T, Matrix.zeros(ring, k, n)], [c.G.T, Matrix.identity(ring, n)]])
    return CertifiedRelation(dual(rel.target), dual(rel.source),
                             Certificate(U, c.U.T, Matrix.zeros(ring, m, n)))


def join(p: MatrixPair, q: MatrixPair) -> MatrixPair:
    """Supremum, written out as the three-block-row pair dual to the meet."""
    _same_arity(p, q)
    ring = p.ring
    m, k, m2, k2, n = p.B.rows, p.B.cols, q.B.rows, q.B.cols, p.arity
    Z, I = Matrix.zeros, Matrix.identity
    left = block([
        [p.B, p.A, Z(ring, m, k2), Z(ring, m, n)],
        [Z(ring, m2, k), Z(ring, m2, n), q.B, q.A],
        [Z(ring, n, k), I(ring, n), Z(ring, n, k2), I(ring, n)],
    ])
    right = vstack(Z(ring, m, n), Z(ring, m2, n), I(ring, n))
    return MatrixPair(left, right)


def is_top(p: MatrixPair) -> Matrix | None:
    """``W`` with ``B W = A`` exactly when ``[p]`` is the maximum."""
    return solve_left(p.B, p.A)


def is_bottom(p: MatrixPair) -> Matrix | None:
    """``U`` with ``U B = 0`` and ``U A = I_n`` exactly when ``[p]`` is the minimum."""
    ring, k, n = p.ring, p.B.cols, p.arity
    H = hstack(p.B, p.A)
    rhs = vstack(Matrix.zeros(ring, k, n), Matrix.identity(ring, n))
    Ut = solve_left(H.T, rhs)
    return None if Ut is None else Ut.T


# fields: reduction to systems and canonical forms

def _require_field(ring: RingSpec):
    if not ring.is_field:
        raise NotAField(f"operation needs a field, got {ring}")


def to_system(p: MatrixPair) -> tuple[Matrix, CertifiedRelation, CertifiedRelation]:
    """Reduce ``p`` over a field to an equivalent system in RREF.

    With ``C`` a generalized inverse of ``B`` and ``E = BC`` idempotent, the
    system matrix is ``(I - E) A``, brought to RREF. Returns the RREF matrix
    ``R`` and certified relations ``p <= (0|R)`` and ``(0|R) <= p``.
    """
    _require_field(p.ring)
    ring, B, A = p.ring, p.B, p.A
    m = B.rows
    C = generalized_inverse(B)
    E = B @ C
    I = Matrix.identity(ring, m)
    A1 = (I - E) @ A
    sys1 = MatrixPair.system(A1)
    EA = MatrixPair(E, A)

    # p = (ECB... ) : (B|A) = (E B | A) <= (E | A)
    up_to_E = rod_right_multiply(EA, B)
    # (E|A) <= ((I-E)E | (I-E)A) = (0_{m x m} | A1) <= (0_{m x 0} | A1)
    to_zero = rod_left_multiply(EA, I - E)
    drop_cols = rod_right_multiply(sys1, Matrix.zeros(ring, 0, m))
    forward = compose_all(up_to_E, to_zero, drop_cols)

    # (0|A1) <= (E | A1) = (E | A - EA) <= (E | A) <= (B | A)
    widen = rod_right_multiply(MatrixPair(E, A1), Matrix.zeros(ring, m, 0))
    untranslate = rod_translate(EA, -A)
    down_to_B = rod_right_multiply(p, C)
    backward = compose_all(widen, untranslate, down_to_B)

    res = rref(A1)
    R = res.R
    sysR = MatrixPair.system(R)
    X = A1 @ _selector(ring, res.pivots, A1.cols)  # X R = A1
    fwd_r = rod_left_multiply(sys1, res.P)
    bwd_r = rod_left_multiply(sysR, X)
    forward = compose(forward, fwd_r)
    backward = compose(bwd_r, backward)
    return R, forward, backward


def _selector(ring, pivots, ncols):
    from .linalg import pivot_selector
    return pivot_selector(ring, pivots, ncols)


def canonical_form(p: MatrixPair) -> Matrix:
    """The unique RREF system matrix of ``[p]`` over a field.

    ``0 x n`` means the maximum ``1_n``; ``I_n`` means the minimum ``0_n``.
    """
    _require_field(p.ring)
    m = p.B.rows
    E = p.B @ generalized_inverse(p.B)
    return rref((Matrix.identity(p.ring, m) - E) @ p.A).R


def equivalent(p: MatrixPair, q: MatrixPair) -> bool:
    """Class equality; canonical forms over fields, two-way decisions otherwise."""
    _same_arity(p, q)
    if p.ring.is_field:
        return canonical_form(p) == canonical_form(q)
    return bool(decide_leq(p, q)) and bool(decide_leq(q, p))


class Verdict(enum.Enum):
    PROVED = "proved"
    DISPROVED = "disproved"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    certificate: Certificate | None = None
    # (module, element of eval(p) not in eval(q)) when a finite refutation was found
    counterexample: tuple | None = field(default=None, compare=False)
    reason: str = ""

    def __bool__(self):
        return self.verdict is Verdict.PROVED


LINEAR_UNKNOWNS_CAP = int(os.environ.get("MATPAIRS_LINEAR_CAP", "4000"))


def decide_leq(p: MatrixPair, q: MatrixPair, *, modules=None, search_counterexample: bool = True,
               linear_cap: int | None = None) -> Decision:
    """Decide ``[p] <= [q]``.

    Over a field both pairs are reduced to RREF systems and compared by row
    space; the certificate is the composite of the two reductions and the
    row-space witness. Over Z and Z/n the defining equations are linear in
    ``(U, V, G)`` and are solved exactly; systems whose unknown count exceeds
    ``linear_cap`` yield ``UNKNOWN``. Refutations over finite rings carry a
    counterexample from evaluation on finite modules when one is found.
    """
    _same_arity(p, q)
    ring = p.ring
    if ring.is_field:
        Rp, fwd, _ = to_system(p)
        Rq, _, bwd = to_system(q)
        X = row_space_contains(rref(Rp), Rq) if Rp.rows else (
            Matrix.zeros(ring, Rq.rows, 0) if Rq.rows == 0 else None)
        if X is None:
            cx = _refute(p, q, modules) if search_counterexample and ring.is_finite else None
            return Decision(Verdict.DISPROVED, counterexample=cx,
                            reason="row space of q is not contained in row space of p")
        step = rod_left_multiply(MatrixPair.system(Rp), X)
        rel = compose_all(fwd, step, bwd)
        return Decision(Verdict.PROVED, rel.cert)
    cert = _linear_certificate(p, q, LINEAR_UNKNOWNS_CAP if linear_cap is None else linear_cap)
    if cert is None:
        cx = _refute(p, q, modules) if search_counterexample and ring.is_finite else None
        return Decision(Verdict.DISPROVED, counterexample=cx,
                        reason="the certificate equations have no solution")
    if cert == "cap":
        return Decision(Verdict.UNKNOWN, reason="linear system exceeds the unknowns cap")
    return Decision(Verdict.PROVED, cert)


def _linear_certificate(p: MatrixPair, q: MatrixPair, cap: int):
    """Solve ``U B - B' V = 0`` and ``U A - B' G = A'`` for ``(U, V, G)``."""
    ring = p.ring
    m, k, n = p.B.rows, p.B.cols, p.arity
    m2, k2 = q.B.rows, q.B.cols
    nU, nV, nG = m2 * m, k2 * k, k2 * n
    unknowns = nU + nV + nG
    if unknowns > cap:
        return "cap"
    eqs = m2 * k + m2 * n
    Bp, Ap, Bq, Aq = p.B, p.A, q.B, q.A
    rows = [[ring.zero] * unknowns for _ in range(eqs)]
    rhs = [[ring.zero] for _ in range(eqs)]
    e = 0
    for a in range(m2):
        for b in range(k):
            r = rows[e]
            for c in range(m):
                r[a * m + c] = Bp[c, b]
            for d in range(k2):
                r[nU + d * k + b] = ring.neg(Bq[a, d])
            e += 1
    for a in range(m2):
        for j in range(n):
            r = rows[e]
            for c in range(m):
                r[a * m + c] = Ap[c, j]
            for d in range(k2):
                r[nU + nV + d * n + j] = ring.neg(Bq[a, d])
            rhs[e][0] = Aq[a, j]
            e += 1
    x = solve_left(Matrix(ring, rows, eqs, unknowns), Matrix(ring, rhs, eqs, 1))
    if x is None:
        return None
    xs = [x[i, 0] for i in range(unknowns)]
    U = Matrix(ring, [xs[a * m:(a + 1) * m] for a in range(m2)], m2, m)
    V = Matrix(ring, [xs[nU + d * k:nU + (d + 1) * k] for d in range(k2)], k2, k)
    G = Matrix(ring, [xs[nU + nV + d * n:nU + nV + (d + 1) * n] for d in range(k2)], k2, n)
    cert = Certificate(U, V, G)
    assert verify(cert, p, q)
    return cert


def _refute(p, q, modules):
    from . import semantics
    try:
        return semantics.find_separating_element(p, q, modules)
    except ScaleCapExceeded:
        return None


# principal ideal domains

def pid_reduce(p: MatrixPair) -> list[tuple[object, Matrix]]:
    """Diagonalize ``B`` and split ``[p]`` into unary-left pieces ``[d_i | row_i(PA)]``.

    The meet of the pieces is ``[p]``. Rows past the diagonal get ``d = 0``.
    """
    if not p.ring.is_euclidean:
        raise NotEuclidean(f"pid_reduce needs a Euclidean ring, got {p.ring}")
    snf = smith_normal_form(p.B)
    PA = snf.P @ p.A
    diag = snf.diagonal
    out = []
    for i in range(p.B.rows):
        d = diag[i] if i < len(diag) else p.ring.zero
        out.append((d, PA.submatrix(rows=[i])))
    return out


def pid_diagonalize(p: MatrixPair) -> tuple[MatrixPair, CertifiedRelation, CertifiedRelation]:
    """``[B | A] = [PBQ | PA]`` with certificates in both directions."""
    if not p.ring.is_euclidean:
        raise NotEuclidean(f"pid_diagonalize needs a Euclidean ring, got {p.ring}")
    snf = smith_normal_form(p.B)
    PB, PA = snf.P @ p.B, snf.P @ p.A
    d = MatrixPair(snf.D, PA)
    mid = MatrixPair(PB, PA)
    forward = compose(rod_left_multiply(p, snf.P), rod_right_multiply(d, snf.Q_inv))
    backward = compose(rod_right_multiply(mid, snf.Q), rod_left_multiply(mid, snf.P_inv))
    return d, forward, backward


def pieces_meet(ring: RingSpec, pieces, arity: int) -> MatrixPair:
    """Meet of the ``[d | row]`` pieces returned by :func:`pid_reduce`."""
    out = MatrixPair.top(ring, arity)
    for d, row in pieces:
        out = meet(out, MatrixPair(Matrix(ring, [[d]]), row))
    return out


def systems_transfer(rel: CertifiedRelation, n: int) -> CertifiedRelation:
    """From ``(A, A') <= (B | C', C'')`` build ``(A | A') <= (B, C' | C'')``.

    ``A`` and ``C'`` are the first ``n`` columns. The certificate follows the
    displayed equations ``U A = (B, C')(G'; I_n)`` and
    ``U A' = C'' + (B, C')(G''; 0)``.
    """
    src, dst, c = rel.source, rel.target, rel.cert
    ring = src.ring
    total = src.arity
    if not 0 <= n <= total:
        raise DimensionMismatch(f"split point {n} outside 0..{total}")
    cols_a, cols_b = list(range(n)), list(range(n, total))
    A, A2 = src.A.submatrix(cols=cols_a), src.A.submatrix(cols=cols_b)
    C1, C2 = dst.A.submatrix(cols=cols_a), dst.A.submatrix(cols=cols_b)
    G1, G2 = c.G.submatrix(cols=cols_a), c.G.submatrix(cols=cols_b)
    new_src = MatrixPair(A, A2)
    new_dst = MatrixPair(hstack(dst.B, C1), C2)
    V = vstack(G1, Matrix.identity(ring, n))
    G = vstack(G2, Matrix.zeros(ring, n, total - n))
    return CertifiedRelation(new_src, new_dst, Certificate(c.U, V, G))


# ring morphisms

@dataclass(frozen=True)
class RingHom:
    """The canonical map between supported rings (reduction of residues)."""
    source: RingSpec
    target: RingSpec

    def __post_init__(self):
        s, t = self.source, self.target
        if s == t:
            return
        if s.kind == INTEGERS and t.kind in (MOD_RING, PRIME_FIELD):
            return
        if s.kind in (MOD_RING, PRIME_FIELD) and t.kind in (MOD_RING, PRIME_FIELD) \
                and s.modulus % t.modulus == 0:
            return
        raise UnsupportedHom(f"no supported ring morphism {s} -> {t}")

    def __call__(self, x):
        if self.source == self.target:
            return x
        return self.target(int(x))


def map_pair(f: RingHom, p: MatrixPair) -> MatrixPair:
    if p.ring != f.source:
        raise RingMismatch(f"pair over {p.ring}, morphism from {f.source}")
    return MatrixPair(p.B.map(f.target, f), p.A.map(f.target, f))


def map_certificate(f: RingHom, c: Certificate) -> Certificate:
    return Certificate(c.U.map(f.target, f), c.V.map(f.target, f), c.G.map(f.target, f))


def map_relation(f: RingHom, rel: CertifiedRelation) -> CertifiedRelation:
    return CertifiedRelation(map_pair(f, rel.source), map_pair(f, rel.target), map_certificate(f, rel.cert))


# text format

def format_pair(p: MatrixPair) -> str:
    left = "" if p.B.cols == 0 else f"{p.B} "
    return f"[{left}| {p.A}]"


def parse_pair_at(text: str, pos: int, ring: RingSpec) -> tuple[MatrixPair, int]:
    i = _skip(text, pos)
    if i >= len(text) or text[i] != "[":
        raise ParseError("expected '[' to open a pair", text, i)
    i = _skip(text, i + 1)
    B = None
    if i < len(text) and text[i] != "|":
        B, i = parse_matrix_at(text, i, ring)
        i = _skip(text, i)
    if i >= len(text) or text[i] != "|":
        raise ParseError("expected '|' between B and A", text, i)
    A, i = parse_matrix_at(text, i + 1, ring)
    i = _skip(text, i)
    if i >= len(text) or text[i] != "]":
        raise ParseError("expected ']' to close the pair", text, i)
    if B is None:
        B = Matrix.zeros(ring, A.rows, 0)
    try:
        return MatrixPair(B, A), i + 1
    except DimensionMismatch as exc:
        raise ParseError(str(exc), text, pos) from None


def parse_pair(text: str, ring: RingSpec) -> MatrixPair:
    p, end = parse_pair_at(text, 0, ring)
    if text[end:].strip():
        raise ParseError("trailing characters after pair", text, end)
    return p


def format_certificate(c: Certificate) -> str:
    return f"{c.U};{c.V};{c.G}"


def parse_certificate(text: str, ring: RingSpec) -> Certificate:
    mats = []
    i = 0
    for idx in range(3):
        if idx:
            i = _skip(text, i)
            if i >= len(text) or text[i] != ";":
                raise ParseError("expected ';' between certificate matrices", text, i)
            i += 1
        M, i = parse_matrix_at(text, i, ring)
        mats.append(M)
    if text[i:].strip():
        raise ParseError("trailing characters after certificate", text, i)
    return Certificate(*mats)


def _skip(text, i):
    while i < len(text) and text[i].isspace():
        i += 1
    return i


__all__ = [
    "MatrixPair", "Certificate", "CertifiedRelation", "Verdict", "Decision", "RingHom",
    "verify", "identity_relation", "rod_left_multiply", "rod_right_multiply", "rod_translate",
    "compose", "compose_all", "decompose", "meet", "meet_with_projections", "dual", "dual_relation",
    "join", "is_top", "is_bottom", "to_system", "canonical_form", "equivalent", "decide_leq",
    "pid_reduce", "pid_diagonalize", "pieces_meet", "systems_transfer", "map_pair",
    "map_certificate", "map_relation", "format_pair", "parse_pair", "format_certificate",
    "parse_certificate", "RATIONALS",
]
