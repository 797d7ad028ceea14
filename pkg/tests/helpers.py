"""Shared test data and generators."""

import random

from ffsolve import ZZ, Mat, MulBackend, PartitionStrategy

# the worked 4x5 system: coefficients | right-hand side
GOLDEN = [
    [3, 1, 1, -1, 4],
    [1, 2, 0, 1, 4],
    [0, 1, 2, 0, -2],
    [1, 0, 0, 2, -1],
]

STRATEGIES = [
    PartitionStrategy("dichotomous"),
    PartitionStrategy("onepass"),
    PartitionStrategy("forward"),
    PartitionStrategy.fixed_upper(3),
    PartitionStrategy.fixed(lambda k, l: l - 1 if (l - k) % 2 else k + 1),
]
BACKENDS = [MulBackend(), MulBackend.strassen(1), MulBackend.strassen(2)]


def rand_mat(rng, rows, cols, domain=ZZ, bound=9, degree=2):
    return Mat([[domain.random(rng, bound, degree) for _ in range(cols)] for _ in range(rows)], domain, cols=cols)
