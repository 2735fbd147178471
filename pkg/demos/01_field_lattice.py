"""Pairs over a finite field: canonical forms, decisions with certificates,
and the lattice operations."""

from matpairs import rings
from matpairs.pairs import canonical_form, decide_leq, dual, join, meet, parse_pair, verify

F3 = rings.F(3)

x = parse_pair("[|1x2[1,0]]", F3)      # v1 = 0
y = parse_pair("[|1x2[1,1]]", F3)      # v1 + v2 = 0
z = parse_pair("[1x1[1]|1x2[2,0]]", F3)  # 2 v1 lies in the image of 1, always true

for name, p in (("x", x), ("y", y), ("z", z)):
    print(f"{name} = {p}   canonical form {canonical_form(p)}")

d = decide_leq(x, y)
print("\nx <= y ?", d.verdict.value)
if d.counterexample:
    M, a = d.counterexample
    print("  separating element", a, "in", M)

w = meet(x, y)
d = decide_leq(w, y)
print("meet(x, y) <= y ?", d.verdict.value)
print("  certificate", d.certificate)
print("  verifies:", verify(d.certificate, w, y))

print("\nmeet(x, y) canonical form:", canonical_form(w))
print("join(x, y) canonical form:", canonical_form(join(x, y)))
print("dual(x) canonical form:   ", canonical_form(dual(x)))
print("dual(dual(x)) equals x as a class:", canonical_form(dual(dual(x))) == canonical_form(x))
