"""
Closed forms against brute-force linear algebra
===============================================

Draws random lists of monomials and compares every syzygy module and
filtration ideal with the oracle, which solves for kernels degree by degree.
"""
import random
import time

from wheelcoh.oracle import (FineDegreeWindow, eps_space, oracle_filtration_ideal,
                             oracle_syzygies, spans_agree)
from wheelcoh.random_inputs import random_flist
from wheelcoh.syzygy import filtration_ideal, syzygy_generators

rng = random.Random(7)
start = time.perf_counter()
checks = failures = 0
for _ in range(25):
    f = random_flist(rng, rng.choice([3, 4, 5]), rng.randint(1, 4))
    window = FineDegreeWindow.around(f)
    for k in range(1, len(f) * (len(f) - 1) // 2 + 1):
        # the window covers every relevant degree, so agreement is exact
        if spans_agree(eps_space(f, k), syzygy_generators(f, k),
                       oracle_syzygies(f, k, window), window) is not None:
            failures += 1
        if filtration_ideal(f, k) != oracle_filtration_ideal(f, k, window):
            failures += 1
        checks += 2
print(f"{checks} comparisons, {failures} failures, {time.perf_counter() - start:.1f}s")
