"""Command line interface: ``matpairs <subcommand> ...`` (also ``python -m matpairs``).

Exit codes: 0 success / proved / true, 1 disproved / false, 2 unknown, 3 usage
or input error.
"""

from __future__ import annotations

import argparse
import sys

from . import grothendieck as k0
from . import homology as hom
from . import pairs as pc
from . import semantics as sem
from .errors import MatPairError, ParseError
from .matrix import parse_matrix
from .rings import PRIME_FIELD, parse_ring

EXIT_OK, EXIT_FALSE, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3

GRAMMAR = """\
text formats:
  ring      Q | Z | F<p> | Z/<n>
  matrix    <rows>x<cols>[e11,e12,...;e21,...]   entries are integers or a/b
            empty matrices have an empty body: 0x3[]  2x0[]
  pair      [<B> | <A>]   a system may omit B: [| <A>]
  cert      <U>;<V>;<G>
  module    comma-separated cyclic orders, e.g. 2,4 for Z/2 (+) Z/4

environment:
  MATPAIRS_EVAL_CAP     largest |M|^n enumerated by eval (default 1000000)
  MATPAIRS_LINEAR_CAP   largest unknown count for leq over Z and Z/n (default 4000)

exit codes: 0 true/proved, 1 false/disproved, 2 unknown, 3 usage error
"""


class UsageError(Exception):
    pass


class Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class Out:
    """Collects human lines and structured key=value records."""

    def __init__(self, fmt: str):
        self.fmt = fmt
        self.human: list[str] = []
        self.records: list[tuple[str, str]] = []

    def put(self, key: str, value, human: str | None = None):
        self.records.append((key, str(value)))
        if human is not None:
            self.human.append(human)

    def say(self, line: str):
        self.human.append(line)

    def flush(self):
        if self.fmt == "structured":
            for k, v in self.records:
                print(f"{k}={v}")
        else:
            for line in self.human:
                print(line)


# argument helpers

def _ring(args, name="ring"):
    return parse_ring(getattr(args, name))


def _pair(text, ring):
    return pc.parse_pair(text, ring)


# commands

def cmd_normalize(args, out):
    ring = _ring(args)
    p = _pair(args.pair, ring)
    if ring.is_field:
        R = pc.canonical_form(p)
        out.put("canonical", R)
        out.put("pair", pc.MatrixPair.system(R), str(pc.MatrixPair.system(R)))
    else:
        d, _, _ = pc.pid_diagonalize(p)
        out.put("pair", d, str(d))
    return EXIT_OK


def cmd_leq(args, out):
    ring = _ring(args)
    p, q = _pair(args.p, ring), _pair(args.q, ring)
    d = pc.decide_leq(p, q, linear_cap=args.cap)
    out.put("verdict", d.verdict.value, d.verdict.value.upper())
    if d.certificate is not None:
        out.put("certificate", d.certificate, f"certificate: {d.certificate}")
    if d.counterexample is not None:
        M, a = d.counterexample
        out.put("module", ",".join(map(str, M.cyclic_orders)))
        out.put("witness", sem.format_vector(a), f"witness: {sem.format_vector(a)} in M = {M}")
    if d.reason:
        out.put("reason", d.reason, f"reason: {d.reason}")
    return {pc.Verdict.PROVED: EXIT_OK, pc.Verdict.DISPROVED: EXIT_FALSE}.get(d.verdict, EXIT_UNKNOWN)


def cmd_verify_cert(args, out):
    ring = _ring(args)
    p, q = _pair(args.p, ring), _pair(args.q, ring)
    c = pc.parse_certificate(args.cert, ring)
    ok = pc.verify(c, p, q)
    out.put("valid", str(ok).lower(), "valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_binary(op):
    def run(args, out):
        ring = _ring(args)
        r = op(_pair(args.p, ring), _pair(args.q, ring))
        out.put("pair", r, str(r))
        return EXIT_OK
    return run


def cmd_dual(args, out):
    r = pc.dual(_pair(args.pair, _ring(args)))
    out.put("pair", r, str(r))
    return EXIT_OK


def cmd_is_top(args, out):
    W = pc.is_top(_pair(args.pair, _ring(args)))
    out.put("top", str(W is not None).lower())
    if W is None:
        out.say("not top")
        return EXIT_FALSE
    out.put("W", W, f"W={W}")
    return EXIT_OK


def cmd_is_bottom(args, out):
    U = pc.is_bottom(_pair(args.pair, _ring(args)))
    out.put("bottom", str(U is not None).lower())
    if U is None:
        out.say("not bottom")
        return EXIT_FALSE
    out.put("U", U, f"U={U}")
    return EXIT_OK


def cmd_to_system(args, out):
    R, fwd, bwd = pc.to_system(_pair(args.pair, _ring(args)))
    out.put("system", R, f"system: {pc.MatrixPair.system(R)}")
    out.put("forward", fwd.cert, f"forward certificate: {fwd.cert}")
    out.put("backward", bwd.cert, f"backward certificate: {bwd.cert}")
    return EXIT_OK


def cmd_pid_reduce(args, out):
    ring = _ring(args)
    p = _pair(args.pair, ring)
    for i, (d, row) in enumerate(pc.pid_reduce(p)):
        out.put(f"piece{i}", f"{ring.format(d)} {row}", f"[1x1[{ring.format(d)}] | {row}]")
    return EXIT_OK


def cmd_map(args, out):
    f = pc.RingHom(parse_ring(args.source), parse_ring(args.target))
    r = pc.map_pair(f, _pair(args.pair, f.source))
    out.put("pair", r, str(r))
    return EXIT_OK


def cmd_k0(args, out):
    ring = _ring(args)
    action = args.action
    if action == "invariant":
        inv = k0.module_invariant(parse_matrix(args.arg, ring))
        out.put("free_rank", inv.free_rank)
        out.put("factors", ",".join(map(str, inv.invariant_factors)))
        out.say(str(inv))
    elif action == "gamma":
        s = k0.gamma(_pair(args.arg, ring))
        _emit_sum(out, s)
    elif action == "kappa":
        s = k0.kappa(parse_matrix(args.arg, ring))
        _emit_sum(out, s)
    elif action == "triangle-check":
        ok = k0.triangle_check(parse_matrix(args.arg, ring))
        out.put("triangle", str(ok).lower(), "triangle commutes" if ok else "triangle fails")
        return EXIT_OK if ok else EXIT_FALSE
    elif action == "character":
        text = sys.stdin.read() if args.arg == "-" else open(args.arg).read()
        value = k0.dim_character(k0.parse_formal_sum(text, ring))
        out.put("character", value, str(value))
    return EXIT_OK


def _emit_sum(out, s):
    for key, coef in sorted(s.items(), key=lambda kc: str(kc[0])):
        out.put("term", f"{coef} {key}", f"{coef} {key}")
    if not s:
        out.say("0")


def cmd_homology(args, out):
    ring = parse_ring(args.field)
    if ring.kind != PRIME_FIELD:
        raise UsageError("--field must be a prime field F<p>")
    q, n = ring.modulus, args.dim
    if args.emit_boundary:
        # D_n maps C_n to C_{n-1}; H_n needs D_n and D_{n+1}
        for m in (n, n + 1):
            D = hom.boundary_matrix(q, m)
            out.put(f"d{m}", D, f"d{m} = {D}")
    h = hom.homology(q, n)
    out.put("free_rank", h.free_rank)
    out.put("torsion", ",".join(map(str, h.torsion)))
    out.say(str(h))
    return EXIT_OK


def cmd_eval(args, out):
    ring = _ring(args)
    M = sem.parse_module(args.module, ring)
    p = _pair(args.pair, ring)
    S = sem.dual_eval(p, M) if args.dual else sem.eval_pair(p, M)
    out.put("order", len(S), f"subgroup of order {len(S)} in M^{p.arity}, M = {M}")
    for a in S:
        out.put("element", sem.format_vector(a), sem.format_vector(a))
    return EXIT_OK


def cmd_suite(args, out):
    from .suite import run_all
    only = {int(x) for x in args.only.split(",")} if args.only else None
    ok = True
    for r in run_all(seed=args.seed, quick=args.quick, only=only):
        ok &= r.passed
        out.put(f"criterion{r.number}", "pass" if r.passed else "fail", r.line)
        # stream progress in human mode
        if out.fmt == "human":
            print(out.human.pop(), flush=True)
    out.put("all", "pass" if ok else "fail", "all criteria pass" if ok else "some criteria FAIL")
    return EXIT_OK if ok else EXIT_FALSE


# parser

def build_parser() -> argparse.ArgumentParser:
    parser = Parser(prog="matpairs", description="Exact matrix-pair calculus.",
                    epilog=GRAMMAR, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--format", choices=("human", "structured"), default="human",
                        help="human-readable output or key=value lines")
    sub = parser.add_subparsers(dest="command", metavar="<command>", required=True)

    def add(name, fn, help_, ring=True):
        sp = sub.add_parser(name, help=help_, epilog=GRAMMAR,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.add_argument("--format", choices=("human", "structured"), default=argparse.SUPPRESS,
                        help="same as the global --format")
        if ring:
            sp.add_argument("--ring", required=True, help="Q, Z, F<p> or Z/<n>")
        sp.set_defaults(func=fn)
        return sp

    sp = add("normalize", cmd_normalize, "canonical form (fields) or diagonal form (Z)")
    sp.add_argument("pair")
    sp = add("leq", cmd_leq, "decide p <= q, with certificate or counterexample")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("--cap", type=int, default=None, help="unknowns cap for Z and Z/n")
    sp = add("verify-cert", cmd_verify_cert, "check a certificate U;V;G for p <= q")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("cert")
    for name, op, h in (("meet", pc.meet, "infimum"), ("join", pc.join, "supremum")):
        sp = add(name, cmd_binary(op), h)
        sp.add_argument("p")
        sp.add_argument("q")
    sp = add("dual", cmd_dual, "dual pair")
    sp.add_argument("pair")
    sp = add("is-top", cmd_is_top, "W with BW = A when the class is the maximum")
    sp.add_argument("pair")
    sp = add("is-bottom", cmd_is_bottom, "U with UB = 0, UA = I when the class is the minimum")
    sp.add_argument("pair")
    sp = add("to-system", cmd_to_system, "equivalent RREF system over a field, with certificates")
    sp.add_argument("pair")
    sp = add("pid-reduce", cmd_pid_reduce, "split into unary-left pieces over Z or a field")
    sp.add_argument("pair")
    sp = add("map", cmd_map, "apply a ring morphism entrywise", ring=False)
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)
    sp.add_argument("pair")
    sp = add("k0", cmd_k0, "Grothendieck group tools")
    sp.add_argument("action", choices=("invariant", "gamma", "kappa", "triangle-check", "character"))
    sp.add_argument("arg", help="matrix, pair, or formal-sum file ('-' for stdin)")
    sp = add("homology", cmd_homology, "H0 or H1 of a prime field", ring=False)
    sp.add_argument("--field", required=True, help="F<p>")
    sp.add_argument("--dim", type=int, choices=(0, 1), required=True)
    sp.add_argument("--emit-boundary", action="store_true", help="also print the boundary matrices")
    sp = add("eval", cmd_eval, "evaluate a pair on a finite module")
    sp.add_argument("--module", required=True, help="cyclic orders, e.g. 2,4")
    sp.add_argument("--pair", required=True)
    sp.add_argument("--dual", action="store_true", help="evaluate the dual subgroup {wA : wB = 0}")
    sp = add("suite", cmd_suite, "acceptance battery", ring=False)
    sp.add_argument("action", choices=("run",))
    sp.add_argument("--quick", action="store_true", help="smaller instance counts")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--only", default=None, help="comma-separated criterion numbers")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Out(args.format)
    try:
        code = args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MatPairError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.flush()
    return code


def run(argv) -> int:
    """Entry point that also converts argparse exits into return codes."""
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
