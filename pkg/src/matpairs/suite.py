"""The acceptance battery: eleven pass/fail criteria shared by the tests and the CLI."""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import randgen
from .grothendieck import triangle_check
from .homology import (
    boundary,
    boundary_matrix,
    chain_basis,
    clear_caches,
    enumerate_classes,
    expected_h1_order,
    face_E,
    face_N,
    homology,
    presentation_h1,
    system_key,
)
from .pairs import (
    CertifiedRelation,
    MatrixPair,
    canonical_form,
    decide_leq,
    dual,
    dual_relation,
    join,
    meet,
)
from .rings import ZZ, F, Zmod
from .semantics import (
    FiniteModule,
    check_presta_soundness,
    eval_pair,
    ev_lattice_laws,
    tensor_annihilation,
)

H1_FIELDS = (2, 3, 5, 7, 11, 13)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None = None

    @property
    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        limit = f" (limit {self.limit:g}s)" if self.limit else ""
        return f"[{status}] {self.number:2d}. {self.name}: {self.detail} [{self.seconds:.2f}s{limit}]"


def _timed(number, name, limit, fn, *args):
    start = time.perf_counter()
    ok, detail = fn(*args)
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ok = False
        detail += f"; too slow ({elapsed:.2f}s)"
    return CriterionResult(number, name, ok, detail, elapsed, limit)


# 1-5, 11: homology

def crit_h1(fields=H1_FIELDS):
    clear_caches()
    got = {}
    for q in fields:
        h = homology(q, 1)
        got[q] = h
    bad = [q for q, h in got.items()
           if h.free_rank != 0 or h.order != expected_h1_order(q) or len(h.torsion) > 1]
    detail = ", ".join(f"H1(F{q})={h}" for q, h in got.items())
    return not bad, detail


def crit_h0(fields=(2, 3, 5)):
    clear_caches()
    got = {q: homology(q, 0) for q in fields}
    ok = all(h.free_rank == 1 and not h.torsion for h in got.values())
    return ok, ", ".join(f"H0(F{q})={h}" for q, h in got.items())


def crit_presentation(fields=H1_FIELDS):
    mismatches = [q for q in fields if presentation_h1(q) != homology(q, 1)]
    return not mismatches, f"agree for q in {list(fields)}" if not mismatches else f"differ at {mismatches}"


def expected_d2(q: int, s: int, r: int) -> dict:
    ring = F(q)
    out = {}
    for rr, c in ((r, 1), (s, -1), (ring.inv(s) * r % q, -1)):
        k = system_key(ring, [[1, rr]])
        out[k] = out.get(k, 0) + c
    return {k: v for k, v in out.items() if v}


def crit_boundary_formulas(q: int = 5):
    ring = F(q)
    bad = []
    for s in range(1, q):
        for r in range(1, q):
            if boundary(system_key(ring, [[1, s, r]])) != expected_d2(q, s, r):
                bad.append((s, r))
    nonzero_d1 = [str(c) for c in chain_basis(q, 1) if boundary(c)]
    ok = not bad and not nonzero_d1
    return ok, f"{(q - 1) ** 2} boundary rows checked, {len(bad)} mismatches; d1 nonzero on {len(nonzero_d1)} classes"


def face_relation_failures(q: int, arity: int = 3) -> list:
    bad = []
    for c in enumerate_classes(q, arity):
        for j in range(arity):
            for i in range(j):
                checks = (
                    (face_N(face_N(c, j), i), face_N(face_N(c, i), j - 1)),
                    (face_E(face_E(c, j), i), face_E(face_E(c, i), j - 1)),
                    (face_N(face_E(c, j), i), face_E(face_N(c, i), j - 1)),
                    (face_E(face_N(c, j), i), face_N(face_E(c, i), j - 1)),
                )
                bad += [(str(c), i, j, t) for t, (a, b) in enumerate(checks) if a != b]
    return bad


def crit_chain_complex(fields=(2, 3, 5, 7), face_fields=(2, 3)):
    bad = []
    for q in fields:
        D0, D1, D2 = (boundary_matrix(q, n) for n in (0, 1, 2))
        if not (D1 @ D0).is_zero():
            bad.append(f"eps*d1 != 0 over F{q}")
        if not (D2 @ D1).is_zero():
            bad.append(f"d1*d2 != 0 over F{q}")
    faces = {q: face_relation_failures(q) for q in face_fields}
    for q, f in faces.items():
        if f:
            bad.append(f"{len(f)} face relation failures over F{q}")
    return not bad, "; ".join(bad) or f"d*d = 0 for q in {list(fields)}, face relations hold for q in {list(face_fields)}"


def crit_census(fields=(2, 3, 5, 7)):
    bad = []
    for q in fields:
        ring = F(q)
        expected = {system_key(ring, [[1, r]]) for r in range(1, q)}
        got = set(chain_basis(q, 1))
        if got != expected or len(got) != q - 1:
            bad.append(q)
    return not bad, "nondegenerate binary classes are exactly [1,r], r != 0" if not bad else f"mismatch at {bad}"


# 6: triangle

def crit_triangle(seed=None, count=100):
    rng = randgen.make_rng(seed)
    fails = 0
    for _ in range(count):
        A = randgen.matrix(rng, F(5), rng.randint(1, 3), rng.randint(1, 4))
        fails += not triangle_check(A)
    for _ in range(count):
        A = randgen.matrix(rng, ZZ, rng.randint(1, 3), rng.randint(1, 4), bound=9)
        fails += not triangle_check(A)
    return fails == 0, f"{2 * count - fails}/{2 * count} pass (F5 and Z)"


# 7: lattice laws

def lattice_law_failures(p, q, r, extra) -> list:
    cf = canonical_form
    bad = []
    a = meet(p, extra)  # a <= p
    b, c = p, q
    if cf(meet(join(a, c), b)) != cf(join(a, meet(b, c))):
        bad.append("modular")
    if cf(meet(p, join(p, q))) != cf(p) or cf(join(p, meet(p, q))) != cf(p):
        bad.append("absorption")
    if cf(meet(p, p)) != cf(p) or cf(join(p, p)) != cf(p):
        bad.append("idempotence")
    if cf(dual(dual(p))) != cf(p):
        bad.append("involution")
    for x, y in ((p, q), (a, p), (r, q)):
        d = decide_leq(x, y, search_counterexample=False)
        dd = decide_leq(dual(y), dual(x), search_counterexample=False)
        if bool(d) != bool(dd):
            bad.append("order reversal")
        if d and not dual_relation(CertifiedRelation(x, y, d.certificate)).verify():
            bad.append("dual certificate")
    return bad


def crit_lattice(seed=None, count=200, fields=(2, 3, 5)):
    rng = randgen.make_rng(seed)
    total = fails = 0
    kinds = set()
    for p_ in fields:
        ring = F(p_)
        for _ in range(count):
            n = rng.randint(1, 3)
            p, q, r, extra = (randgen.pair(rng, ring, n) for _ in range(4))
            bad = lattice_law_failures(p, q, r, extra)
            total += 1
            fails += bool(bad)
            kinds.update(bad)
    detail = f"{total - fails}/{total} instances pass over F2/F3/F5"
    if kinds:
        detail += f" (failing laws: {sorted(kinds)})"
    return fails == 0, detail


# 8-10: certificates and semantics

def battery(ring):
    if ring == F(3):
        return [FiniteModule(ring, (3,)), FiniteModule(ring, (3, 3)), FiniteModule(ring, (3, 3, 3))]
    if ring == Zmod(6):
        return [FiniteModule(ring, (2,)), FiniteModule(ring, (3,)), FiniteModule(ring, (6,))]
    if ring == Zmod(4):
        return [FiniteModule(ring, (2,)), FiniteModule(ring, (4,)), FiniteModule(ring, (2, 4))]
    return []


def crit_certificates(seed=None, count=1000):
    rng = randgen.make_rng(seed)
    report = []
    ok = True
    for ring in (F(3), ZZ, Zmod(6)):
        mods = battery(ring)
        good = 0
        for _ in range(count):
            rel = randgen.rod_chain(rng, ring, rng.randint(1, 2), steps=3)
            passed = rel.verify()
            if passed and mods:
                passed = check_presta_soundness(rel, mods)
            good += passed
        ok &= good == count
        report.append(f"{ring}: {good}/{count}")
    return ok, ", ".join(report)


def crit_ev(seed=None, count=100):
    rng = randgen.make_rng(seed)
    ring = Zmod(6)
    M = FiniteModule(ring, (6,))
    good = sum(_ev_instance(rng, ring, M) for _ in range(count))
    extremes = True
    for mod in [M] + battery(ring):
        for n in (1, 2, 3):
            top = eval_pair(MatrixPair.top(ring, n), mod)
            bottom = eval_pair(MatrixPair.bottom(ring, n), mod)
            extremes &= len(top) == mod.order ** n and list(bottom) == [(mod.zero,) * n]
    return good == count and extremes, f"{good}/{count} lattice-law instances; extremes {'match' if extremes else 'differ'}"


def _ev_instance(rng, ring, M):
    n = rng.randint(1, 2)
    return ev_lattice_laws(randgen.pair(rng, ring, n), randgen.pair(rng, ring, n), M)


def crit_tensor(seed=None, count=200):
    rng = randgen.make_rng(seed)
    ring = Zmod(4)
    mods = [FiniteModule(ring, (2,)), FiniteModule(ring, (4,))]
    good = 0
    for _ in range(count):
        rel = randgen.rod_chain(rng, ring, rng.randint(1, 2), steps=3)
        good += all(tensor_annihilation(rel, K, M) for K in mods for M in mods)
    return good == count, f"{good}/{count} relations annihilate for K, M in {{Z/2, Z/4}}"


CRITERIA = [
    (1, "H1 of prime fields", 30.0, lambda seed, quick: crit_h1(H1_FIELDS[:4] if quick else H1_FIELDS)),
    (2, "H0 of prime fields", 1.0, lambda seed, quick: crit_h0()),
    (3, "presentation of H1 agrees", None, lambda seed, quick: crit_presentation(H1_FIELDS[:4] if quick else H1_FIELDS)),
    (4, "boundary formulas over F5", None, lambda seed, quick: crit_boundary_formulas()),
    (5, "chain complex and face relations", None, lambda seed, quick: crit_chain_complex()),
    (6, "triangle isomorphism", 10.0, lambda seed, quick: crit_triangle(seed, 20 if quick else 100)),
    (7, "lattice laws", 30.0, lambda seed, quick: crit_lattice(seed, 40 if quick else 200)),
    (8, "certificate soundness", None, lambda seed, quick: crit_certificates(seed, 100 if quick else 1000)),
    (9, "Ev structure", None, lambda seed, quick: crit_ev(seed, 20 if quick else 100)),
    (10, "tensor annihilation", None, lambda seed, quick: crit_tensor(seed, 40 if quick else 200)),
    (11, "nondegenerate census", None, lambda seed, quick: crit_census()),
]


def run_criterion(number: int, seed: int | None = None, quick: bool = False) -> CriterionResult:
    for num, name, limit, fn in CRITERIA:
        if num == number:
            return _timed(num, name, limit, fn, seed, quick)
    raise KeyError(number)


def run_all(seed: int | None = None, quick: bool = False, only=None):
    for num, *_ in CRITERIA:
        if only is None or num in only:
            yield run_criterion(num, seed, quick)


__all__ = ["CriterionResult", "CRITERIA", "run_criterion", "run_all", "expected_d2",
           "face_relation_failures", "battery"]
