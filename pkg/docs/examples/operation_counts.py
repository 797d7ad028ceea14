"""
Counting operations
===================

An :class:`~ffsolve.OpCounts` context tallies every addition, multiplication
and exact division.  With halving partitions and classical products the tallies
reproduce the closed-form counts exactly.  The last column compares the
one-pass method, whose multiplication-plus-division count has twice the
leading ``n^3`` coefficient.
"""

import random

from ffsolve import DICHOTOMOUS, MulBackend, OpCounts, solve
from ffsolve.metrics import predict_classical, predict_one_pass, predict_strassen_md, random_system
from ffsolve.oracle import bareiss_one_pass

rng = random.Random(0)
print(f"{'n':>3} {'adds':>7} {'muls':>7} {'divs':>6} | {'closed form':>20} | {'one-pass M+D':>12}")
for n in (2, 4, 8, 16, 32):
    a = random_system(n, n + 1, rng)
    ctx = OpCounts()
    solve(a, DICHOTOMOUS, MulBackend(), ctx)
    p = predict_classical(n)
    octx = OpCounts()
    bareiss_one_pass(a, octx)
    assert octx.as_tuple() == predict_one_pass(n).as_tuple()
    print(f"{n:>3} {ctx.adds:>7} {ctx.muls:>7} {ctx.divs:>6} | {p.a_nm:>6} {p.m_nm:>6} {p.d_nm:>6} | {octx.md:>12}")

###############################################################################
# With Strassen products (cutoff 1) the multiplication-plus-division count
# matches its closed form once the divisions by the order-zero minor, which
# the classical division count leaves out, are included.

for n in (2, 4, 8, 16):
    ctx = OpCounts()
    solve(random_system(n, n + 1, rng), DICHOTOMOUS, MulBackend.strassen(1), ctx)
    print(n, ctx.muls + ctx.divs + ctx.unit_divs, predict_strassen_md(n))
