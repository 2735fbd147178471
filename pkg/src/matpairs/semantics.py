"""Evaluation of pairs on finite modules.

A finite module is a direct sum of cyclic groups ``Z/d1 (+) ... (+) Z/dt`` with
the ring acting componentwise. Its elements are t-tuples of residues and an
element of ``M^n`` is an n-tuple of those. Evaluations enumerate ``M^n`` under an
explicit size cap; going over the cap raises :class:`ScaleCapExceeded` rather
than truncating.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import gcd, prod

from .errors import ArityMismatch, RingMismatch, ScaleCapExceeded, UnsupportedRing, UnverifiedCertificate
from .linalg import smith_normal_form
from .pairs import CertifiedRelation, MatrixPair, join, meet
from .rings import INTEGERS, MOD_RING, PRIME_FIELD, ZZ, RingSpec

EVAL_CAP = int(os.environ.get("MATPAIRS_EVAL_CAP", str(10**6)))


@dataclass(frozen=True)
class FiniteModule:
    ring: RingSpec
    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        orders = tuple(int(d) for d in self.cyclic_orders)
        object.__setattr__(self, "cyclic_orders", orders)
        kind = self.ring.kind
        for d in orders:
            if d < 1:
                raise ValueError(f"cyclic order must be positive, got {d}")
            if kind == PRIME_FIELD and d not in (1, self.ring.modulus):
                raise ValueError(f"a module over {self.ring} has summands of order {self.ring.modulus}")
            if kind == MOD_RING and self.ring.modulus % d:
                raise ValueError(f"{d} does not divide {self.ring.modulus}")
            if kind not in (PRIME_FIELD, MOD_RING, INTEGERS):
                raise UnsupportedRing(f"finite modules over {self.ring} are not supported")

    @property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    @property
    def zero(self) -> tuple:
        return (0,) * len(self.cyclic_orders)

    def elements(self):
        return itertools.product(*(range(d) for d in self.cyclic_orders))

    def generators(self):
        t = len(self.cyclic_orders)
        return [tuple(1 if s == i else 0 for s in range(t)) for i in range(t)]

    def add(self, x, y):
        return tuple((a + b) % d for a, b, d in zip(x, y, self.cyclic_orders))

    def neg(self, x):
        return tuple(-a % d for a, d in zip(x, self.cyclic_orders))

    def act(self, r, x):
        r = int(r)
        return tuple(r * a % d for a, d in zip(x, self.cyclic_orders))

    def direct_sum(self, other: "FiniteModule") -> "FiniteModule":
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")
        return FiniteModule(self.ring, self.cyclic_orders + other.cyclic_orders)

    def __str__(self):
        body = " (+) ".join(f"Z/{d}" for d in self.cyclic_orders) or "0"
        return f"{body} over {self.ring}"


# vectors in M^n

def _vzero(M, n):
    return (M.zero,) * n


def _vadd(M, x, y):
    return tuple(M.add(a, b) for a, b in zip(x, y))


def _apply(M, A, v):
    """Column action ``A v`` for ``v`` in ``M^cols``."""
    out = []
    for i in range(A.rows):
        acc = M.zero
        for j, r in enumerate(A.row(i)):
            if r:
                acc = M.add(acc, M.act(r, v[j]))
        out.append(acc)
    return tuple(out)


def _apply_row(M, w, A):
    """Row action ``w A`` for ``w`` in ``M^rows``."""
    out = []
    for j in range(A.cols):
        acc = M.zero
        for i in range(A.rows):
            r = A[i, j]
            if r:
                acc = M.add(acc, M.act(r, w[i]))
        out.append(acc)
    return tuple(out)


def _power(M, n, cap):
    size = M.order ** n
    if size > cap:
        raise ScaleCapExceeded(f"|M|^{n} = {size} exceeds the cap {cap}")
    return itertools.product(list(M.elements()), repeat=n)


def _span(M, gens, length, cap):
    """Additive closure of ``gens`` inside ``M^length``."""
    found = {_vzero(M, length)}
    for g in gens:
        if g in found:
            continue
        # add the cyclic subgroup generated by g, coset by coset
        new = set(found)
        x = g
        while x not in found:
            new.update(_vadd(M, y, x) for y in found)
            x = _vadd(M, x, g)
        found = new
        if len(found) > cap:
            raise ScaleCapExceeded(f"subgroup exceeds the cap {cap}")
    return found


class SubgroupOfPower:
    """An explicit subgroup of ``M^n`` given by its element set."""

    __slots__ = ("module", "arity", "elements")

    def __init__(self, module: FiniteModule, arity: int, elements):
        self.module = module
        self.arity = arity
        self.elements = frozenset(elements)

    def _check(self, other):
        if self.module != other.module or self.arity != other.arity:
            raise ArityMismatch("subgroups live in different ambient powers")

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    def __eq__(self, other):
        if not isinstance(other, SubgroupOfPower):
            return NotImplemented
        return self.module == other.module and self.arity == other.arity and self.elements == other.elements

    def __hash__(self):
        return hash((self.module, self.arity, self.elements))

    def __le__(self, other):
        self._check(other)
        return self.elements <= other.elements

    def __and__(self, other):
        self._check(other)
        return SubgroupOfPower(self.module, self.arity, self.elements & other.elements)

    def __add__(self, other):
        self._check(other)
        gens = sorted(self.elements) + sorted(other.elements)
        return SubgroupOfPower(self.module, self.arity, _span(self.module, gens, self.arity, EVAL_CAP))

    def is_subgroup(self) -> bool:
        M, n = self.module, self.arity
        if _vzero(M, n) not in self.elements:
            return False
        for x in self.elements:
            if tuple(M.neg(a) for a in x) not in self.elements:
                return False
        return all(_vadd(M, x, y) in self.elements for x in self.elements for y in self.elements)

    def __repr__(self):
        return f"SubgroupOfPower(order={len(self)}, arity={self.arity}, module={self.module})"


def _same_ring(p: MatrixPair, M: FiniteModule):
    if p.ring != M.ring:
        raise RingMismatch(f"pair over {p.ring}, module over {M.ring}")


def _membership(p: MatrixPair, M: FiniteModule):
    """Predicate ``a -> (A a in B M^k)``.

    The pair is lifted to the integers (the action on M factors through Z), and
    ``B`` is diagonalized: with ``P B Q = D``, ``A a`` lies in ``B M^k`` exactly
    when each entry ``(P A a)_i`` lies in ``d_i M``, and ``d Z/m = gcd(d, m) Z/m``.
    """
    snf = smith_normal_form(p.B.map(ZZ, int))
    PA = snf.P @ p.A.map(ZZ, int)
    diag = snf.diagonal
    moduli = [tuple(gcd(diag[i] if i < len(diag) else 0, mt) for mt in M.cyclic_orders)
              for i in range(p.B.rows)]

    def member(a):
        image = _apply(M, PA, a)
        return all(x % g == 0 for comp, gs in zip(image, moduli) for x, g in zip(comp, gs))

    return member


def eval_pair(p: MatrixPair, M: FiniteModule, cap: int | None = None) -> SubgroupOfPower:
    """``(B | A)(M) = { a in M^n : B c = A a for some c in M^k }``."""
    _same_ring(p, M)
    cap = EVAL_CAP if cap is None else cap
    member = _membership(p, M)
    return SubgroupOfPower(M, p.arity, [a for a in _power(M, p.arity, cap) if member(a)])


def dual_eval(p: MatrixPair, K: FiniteModule, cap: int | None = None) -> SubgroupOfPower:
    """``{ w A : w B = 0 }`` in ``K^n`` (row-vector action)."""
    _same_ring(p, K)
    cap = EVAL_CAP if cap is None else cap
    zero_k = _vzero(K, p.B.cols)
    out = {_apply_row(K, w, p.A) for w in _power(K, p.B.rows, cap) if _apply_row(K, w, p.B) == zero_k}
    return SubgroupOfPower(K, p.arity, out)


def check_presta_soundness(rel: CertifiedRelation, modules, cap: int | None = None) -> bool:
    """Inclusion of evaluations along a certified relation on every listed module."""
    if not rel.verify():
        raise UnverifiedCertificate("certificate does not verify; refusing to evaluate")
    return all(eval_pair(rel.source, M, cap) <= eval_pair(rel.target, M, cap) for M in modules)


def ev_lattice_laws(p: MatrixPair, q: MatrixPair, M: FiniteModule, cap: int | None = None) -> bool:
    """``eval(meet) = eval(p) & eval(q)`` and ``eval(join) = eval(p) + eval(q)``."""
    ep, eq = eval_pair(p, M, cap), eval_pair(q, M, cap)
    return (eval_pair(meet(p, q), M, cap) == (ep & eq)
            and eval_pair(join(p, q), M, cap) == (ep + eq))


def _tensor(K: FiniteModule, M: FiniteModule, a, b) -> tuple:
    """``sum_j a_j (x) b_j`` in ``K (x) M = (+)_{s,t} Z/gcd(k_s, m_t)``."""
    out = []
    for s, ks in enumerate(K.cyclic_orders):
        for t, mt in enumerate(M.cyclic_orders):
            g = gcd(ks, mt)
            out.append(sum(x[s] * y[t] for x, y in zip(a, b)) % g)
    return tuple(out)


def tensor_pairing_vanishes(source: MatrixPair, target: MatrixPair, K: FiniteModule, M: FiniteModule,
                            cap: int | None = None) -> bool:
    """Every ``a (x) b`` with ``a`` in the dual evaluation of ``target`` on K and
    ``b`` in the evaluation of ``source`` on M is zero."""
    if source.arity != target.arity:
        raise ArityMismatch(f"arity {source.arity} vs {target.arity}")
    left = dual_eval(target, K, cap)
    right = eval_pair(source, M, cap)
    return all(not any(_tensor(K, M, a, b)) for a in left for b in right)


def tensor_annihilation(rel: CertifiedRelation, K: FiniteModule, M: FiniteModule,
                        cap: int | None = None) -> bool:
    if not rel.verify():
        raise UnverifiedCertificate("certificate does not verify; refusing to evaluate")
    return tensor_pairing_vanishes(rel.source, rel.target, K, M, cap)


def default_battery(ring: RingSpec) -> list[FiniteModule]:
    """Cyclic modules ``R/dR`` for the divisors d > 1 of a finite ring's order."""
    if ring.kind == PRIME_FIELD:
        return [FiniteModule(ring, (ring.modulus,))]
    if ring.kind == MOD_RING:
        n = ring.modulus
        return [FiniteModule(ring, (d,)) for d in range(2, n + 1) if n % d == 0]
    return []


def find_separating_element(p: MatrixPair, q: MatrixPair, modules=None, cap: int | None = None):
    """Return ``(M, a)`` with ``a`` in ``p(M)`` but not ``q(M)``, or ``None``.

    Modules that exceed the size cap are skipped.
    """
    for M in (default_battery(p.ring) if modules is None else modules):
        try:
            ep, eq = eval_pair(p, M, cap), eval_pair(q, M, cap)
        except ScaleCapExceeded:
            continue
        for a in sorted(ep.elements - eq.elements):
            return M, a
    return None


def parse_module(text: str, ring: RingSpec) -> FiniteModule:
    try:
        orders = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ValueError(f"module description must be comma-separated integers, got {text!r}") from None
    return FiniteModule(ring, orders)


def format_vector(a) -> str:
    return "(" + ", ".join("(" + ",".join(str(x) for x in c) + ")" if len(c) != 1 else str(c[0]) for c in a) + ")"


__all__ = [
    "FiniteModule", "SubgroupOfPower", "EVAL_CAP", "eval_pair", "dual_eval",
    "check_presta_soundness", "ev_lattice_laws", "tensor_pairing_vanishes", "tensor_annihilation",
    "default_battery", "find_separating_element", "parse_module", "format_vector",
]
