"""
Growth of the operation counts
==============================

``sweep`` runs instrumented solves over a list of sizes and writes a CSV with
measured and predicted counts.  The fitted exponent between consecutive
doublings shows classical products near 3 and Strassen products near
``log2(7)``.  The log factors in the exact counts pull both below their limits
at small sizes.
"""

import sys

from ffsolve import DICHOTOMOUS, MulBackend
from ffsolve.metrics import growth_exponent, sweep

sizes = [4, 8, 16, 32, 64]
for label, backend in (("classical", MulBackend()), ("strassen", MulBackend.strassen(1))):
    rows = sweep(sizes, DICHOTOMOUS, backend)
    print(label)
    for a, b in zip(rows, rows[1:]):
        e = growth_exponent(a.size_n, a.counts.muls, b.size_n, b.counts.muls)
        print(f"  {a.size_n:>3} -> {b.size_n:<3} muls exponent {e:.3f}")

sweep([2, 4, 8, 16], DICHOTOMOUS, MulBackend(), sys.stdout)
