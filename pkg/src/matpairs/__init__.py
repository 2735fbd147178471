"""Exact matrix-pair calculus: certified divisibility, the lattices L_n(R),
K0 and Goursat groups, homology of fields, and finite-module semantics."""

from .errors import (
    ArityMismatch,
    ChainMismatch,
    DimensionMismatch,
    MatPairError,
    NotAField,
    NotEuclidean,
    ParseError,
    RingMismatch,
    ScaleCapExceeded,
    UnsupportedHom,
    UnsupportedRing,
    UnverifiedCertificate,
)
from .linalg import generalized_inverse, rank, rref, smith_normal_form, solve_left
from .matrix import Matrix, block, hstack, parse_matrix, vstack
from .pairs import (
    Certificate,
    CertifiedRelation,
    Decision,
    MatrixPair,
    RingHom,
    Verdict,
    canonical_form,
    compose,
    decide_leq,
    decompose,
    dual,
    is_bottom,
    is_top,
    join,
    map_certificate,
    map_pair,
    meet,
    parse_certificate,
    parse_pair,
    pid_reduce,
    rod_left_multiply,
    rod_right_multiply,
    rod_translate,
    to_system,
    verify,
)
from .rings import QQ, ZZ, F, RingSpec, Zmod, parse_ring

__version__ = "0.1.0"
