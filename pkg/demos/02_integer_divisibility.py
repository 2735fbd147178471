"""Divisibility statements over Z and Z/n, decided by solving for a certificate."""

from matpairs import rings
from matpairs.pairs import decide_leq, is_top, parse_pair, pid_reduce, pieces_meet

ZZ, Z4 = rings.ZZ, rings.Zmod(4)

p = parse_pair("[2x2[4,6;0,2]|2x1[2;1]]", ZZ)
print("p =", p)
pieces = pid_reduce(p)
for d, row in pieces:
    print(f"  piece [{d} | {row}]")
w = pieces_meet(ZZ, pieces, p.arity)
print("pieces meet back to p:", bool(decide_leq(w, p)) and bool(decide_leq(p, w)))

two, four = parse_pair("[1x1[2]|1x1[1]]", ZZ), parse_pair("[1x1[4]|1x1[1]]", ZZ)
print("\n4 | x  implies  2 | x :", decide_leq(four, two).verdict.value)
print("2 | x  implies  4 | x :", decide_leq(two, four).verdict.value)

print("\nis [2 | 6] the top class? W =", is_top(parse_pair("[1x1[2]|1x1[6]]", ZZ)))

top = parse_pair("[1x1[1]|1x1[0]]", Z4)
even = parse_pair("[1x1[2]|1x1[1]]", Z4)
d = decide_leq(top, even)
print("\nover Z/4, everything is even?", d.verdict.value)
M, a = d.counterexample
print("  counterexample", a, "in", M)
