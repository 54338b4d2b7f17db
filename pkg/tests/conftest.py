import random

from tropnorm.core import NormalMatrix, from_offdiag_mask


def rand_normal(rng: random.Random, n: int) -> NormalMatrix:
    """Uniformly random normal matrix of order n."""
    return from_offdiag_mask(n, rng.getrandbits(n * n - n))


def rand_order(rng: random.Random, lo: int = 2, hi: int = 8) -> int:
    return rng.randint(lo, hi)
