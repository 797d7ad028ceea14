"""
Solving a 4x4 integer system step by step
=========================================

The reduction turns the extended matrix ``(A | b)`` into
``(det(A) I, G)`` where every entry of ``G`` is a minor of the input, so no
fraction ever appears.  A trace list records each intermediate block.
"""

from ffsolve import DICHOTOMOUS, Mat, solve

A = Mat([
    [3, 1, 1, -1, 4],
    [1, 2, 0, 1, 4],
    [0, 1, 2, 0, -2],
    [1, 0, 0, 2, -1],
])

trace = []
sol = solve(A, DICHOTOMOUS, trace=trace)

###############################################################################
# Each event names the row band ``k..l-1`` it works on.  ``step2`` blocks hold
# surrounding minors of the next order; ``reduce`` and ``step4`` blocks hold
# Cramer numerators.

for e in trace:
    print(f"{e.kind:6s} k={e.k} s={e.s} l={e.l} c={e.c} delta={e.delta}")
    print(e.block)
    print()

###############################################################################
# The last column of ``minors`` divided by ``delta_n`` is the solution.

print("delta =", sol.delta_n)
print("x =", [str(x) for x in sol.solution()])
