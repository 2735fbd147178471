"""Seeded random matrices, pairs and chains of divisibility moves."""

from __future__ import annotations

import random
from fractions import Fraction

from .matrix import Matrix, hstack, vstack
from .pairs import (
    CertifiedRelation,
    MatrixPair,
    compose,
    identity_relation,
    rod_left_multiply,
    rod_right_multiply,
    rod_translate,
)
from .rings import INTEGERS, RATIONALS, RingSpec

DEFAULT_SEED = 1729


def make_rng(seed: int | None = None) -> random.Random:
    return random.Random(DEFAULT_SEED if seed is None else seed)


def scalar(rng: random.Random, ring: RingSpec, bound: int = 9):
    if ring.is_finite:
        return rng.randrange(ring.order)
    if ring.kind == INTEGERS:
        return rng.randint(-bound, bound)
    if ring.kind == RATIONALS:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
    raise ValueError(f"no sampler for {ring}")


def matrix(rng, ring: RingSpec, rows: int, cols: int, bound: int = 9) -> Matrix:
    return Matrix(ring, [[scalar(rng, ring, bound) for _ in range(cols)] for _ in range(rows)], rows, cols)


def pair(rng, ring: RingSpec, arity: int, max_rows: int = 3, max_width: int = 2, bound: int = 3) -> MatrixPair:
    m = rng.randint(0, max_rows)
    k = rng.randint(0, max_width)
    return MatrixPair(matrix(rng, ring, m, k, bound), matrix(rng, ring, m, arity, bound))


def invertible(rng, ring: RingSpec, n: int, steps: int = 6) -> tuple[Matrix, Matrix]:
    """A random product of elementary matrices and its inverse."""
    P = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    Pi = [r[:] for r in P]
    red = ring.reduce
    for _ in range(steps if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        if rng.random() < 0.3:
            P[i], P[j] = P[j], P[i]
            for r in Pi:
                r[i], r[j] = r[j], r[i]
        else:
            c = ring(scalar(rng, ring, 3))
            P[i] = [red(a + c * b) for a, b in zip(P[i], P[j])]
            for r in Pi:
                r[j] = red(r[j] - c * r[i])
    return Matrix(ring, P, n, n), Matrix(ring, Pi, n, n)


def rod_step(rng, p: MatrixPair, max_rows: int = 3, bound: int = 3) -> CertifiedRelation:
    """One random move ``p <= q`` by one of the three rules."""
    ring = p.ring
    m, k, n = p.B.rows, p.B.cols, p.arity
    rule = rng.randrange(3)
    if rule == 0:
        U = matrix(rng, ring, rng.randint(1, max_rows), m, bound)
        return rod_left_multiply(p, U)
    if rule == 1:
        # p = (B' V | A) with B' = (B, X) and V = (I; 0)
        extra = rng.randint(0, 1)
        Bq = hstack(p.B, matrix(rng, ring, m, extra, bound))
        V = vstack(Matrix.identity(ring, k), Matrix.zeros(ring, extra, k))
        return rod_right_multiply(MatrixPair(Bq, p.A), V)
    G = matrix(rng, ring, k, n, bound)
    return rod_translate(MatrixPair(p.B, p.A - p.B @ G), G)


def rod_chain(rng, ring: RingSpec, arity: int, steps: int = 3, **kw) -> CertifiedRelation:
    """A random pair followed by ``steps`` random moves, composed into one relation."""
    start = pair(rng, ring, arity)
    rel = identity_relation(start)
    for _ in range(steps):
        rel = compose(rel, rod_step(rng, rel.target, **kw))
    return rel


__all__ = ["DEFAULT_SEED", "make_rng", "scalar", "matrix", "pair", "invertible", "rod_step", "rod_chain"]
