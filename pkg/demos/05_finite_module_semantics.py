"""Evaluating pairs on finite modules: soundness of certificates and the tensor pairing."""

import random

from matpairs import randgen
from matpairs.pairs import decide_leq, parse_pair
from matpairs.rings import Zmod
from matpairs.semantics import FiniteModule, check_presta_soundness, dual_eval, eval_pair, tensor_pairing_vanishes

Z4 = Zmod(4)
M = FiniteModule(Z4, (2, 4))
p = parse_pair("[1x1[2]|1x1[1]]", Z4)
print(f"{p} evaluated on {M}:", sorted(eval_pair(p, M)))
print(f"dual subgroup on {M}:", sorted(dual_eval(p, M)))

rng = random.Random(1)
mods = [FiniteModule(Z4, o) for o in ((2,), (4,), (2, 4))]
ok = sum(check_presta_soundness(randgen.rod_chain(rng, Z4, 2), mods) for _ in range(200))
print(f"\nrandom certified relations sound on the battery: {ok}/200")

K = FiniteModule(Z4, (4,))
for _ in range(1000):
    a, b = randgen.pair(rng, Z4, 1), randgen.pair(rng, Z4, 1)
    if not tensor_pairing_vanishes(a, b, K, K):
        print("\nnonvanishing tensor pairing for", a, "and", b)
        print("so the first is not below the second:", decide_leq(a, b).verdict.value)
        break
