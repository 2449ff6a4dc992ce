"""Shared test helpers."""
import math
from itertools import product


def coprime_pairs(rmax: int):
    """All (r, a) with 2 <= r <= rmax, 1 <= a < r, gcd(r, a) = 1."""
    for r in range(2, rmax + 1):
        for a in range(1, r):
            if math.gcd(r, a) == 1:
                yield r, a


def all_label_lists(max_n: int, max_alpha: int):
    """Every label list with 1 <= n <= max_n and 2 <= alpha_t <= max_alpha."""
    for n in range(1, max_n + 1):
        yield from (list(t) for t in product(range(2, max_alpha + 1), repeat=n))
