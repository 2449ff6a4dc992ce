"""Jung-Hirzebruch continued fractions and the integer series built from them.

For coprime r > a >= 1 the fraction r/a has a unique expansion
r/a = alpha_1 - 1/(alpha_2 - 1/(...)) with every alpha_t >= 2.  The label
list [alpha_1..alpha_n] records the negated self-intersection numbers of
the exceptional curves of the minimal resolution of the cyclic quotient
surface singularity of type 1/r(1,a).  From the labels we derive:

* the i-series and j-series (exponents of the generators of the special
  modules),
* the dual expansion of r/(r-a) via the sigma-series formula,
* the generators of the invariant ring as explicit monomials.

All arithmetic is exact (Python integers / fractions); no floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class Monomial:
    """A monomial x^ex * y^ey with nonnegative integer exponents."""

    ex: int
    ey: int

    def __post_init__(self) -> None:
        if self.ex < 0 or self.ey < 0:
            raise ValueError(f"negative exponent in monomial ({self.ex},{self.ey})")

    @property
    def total(self) -> int:
        return self.ex + self.ey

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.ex + other.ex, self.ey + other.ey)

    def __str__(self) -> str:
        if self.ex == 0 and self.ey == 0:
            return "1"
        parts = []
        if self.ex == 1:
            parts.append("x")
        elif self.ex > 1:
            parts.append(f"x^{self.ex}")
        if self.ey == 1:
            parts.append("y")
        elif self.ey > 1:
            parts.append(f"y^{self.ey}")
        return "".join(parts)


def validate_group_params(r: int, a: int) -> None:
    """Check that (r, a) defines a group of type 1/r(1,a) with r > a >= 1 coprime."""
    if not (isinstance(r, int) and isinstance(a, int)):
        raise TypeError("r and a must be integers")
    if not (r > a >= 1):
        raise ValueError(f"need r > a >= 1, got r={r}, a={a}")
    if gcd(r, a) != 1:
        raise ValueError(f"need gcd(r,a)=1, got gcd({r},{a})={gcd(r, a)}")


def validate_labels(labels: list[int]) -> None:
    if len(labels) == 0:
        raise ValueError("label list must be nonempty")
    for alpha in labels:
        if not isinstance(alpha, int) or alpha < 2:
            raise ValueError(f"every label must be an integer >= 2, got {labels}")


def hj_expand(r: int, a: int) -> list[int]:
    """Expand r/a as the unique all->=2 continued fraction [alpha_1..alpha_n].

    Ceiling recursion: alpha = ceil(r/a), next pair (a, alpha*a - r).
    """
    validate_group_params(r, a)
    labels = []
    while a > 0:
        alpha = -(-r // a)  # ceil(r/a)
        labels.append(alpha)
        r, a = a, alpha * a - r
    return labels


def hj_value(labels: list[int]) -> tuple[int, int]:
    """Evaluate [alpha_1..alpha_n] back to the reduced fraction (r, a)."""
    validate_labels(labels)
    val = Fraction(labels[-1])
    for alpha in reversed(labels[:-1]):
        val = alpha - 1 / val
    return val.numerator, val.denominator


@dataclass(frozen=True)
class IJSeries:
    """The i- and j-series of r/a = [alpha_1..alpha_n].

    Both satisfy s_t = alpha_{t-1} s_{t-1} - s_{t-2}; the i-series is seeded
    with (r, a) and strictly decreases to i_n = 1, i_{n+1} = 0; the j-series
    is seeded with (0, 1) and strictly increases to j_{n+1} = r.
    """

    r: int
    a: int
    labels: tuple[int, ...]
    i: tuple[int, ...]
    j: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.labels)


def ij_series(r: int, a: int) -> IJSeries:
    """Compute the i/j-series for (r, a), validating every invariant."""
    labels = hj_expand(r, a)
    n = len(labels)
    i = [r, a]
    j = [0, 1]
    for t in range(2, n + 2):
        alpha = labels[t - 2]
        i.append(alpha * i[-1] - i[-2])
        j.append(alpha * j[-1] - j[-2])
    assert i[n] == 1 and i[n + 1] == 0, (r, a, i)
    assert j[n + 1] == r, (r, a, j)
    assert all(i[t] > i[t + 1] for t in range(n + 1))
    assert all(j[t] < j[t + 1] for t in range(n + 1))
    # determinant identity: each consecutive pair spans a sublattice of index r
    for p in range(n + 1):
        assert i[p] * j[p + 1] - i[p + 1] * j[p] == r, (r, a, p)
    # congruence underpinning the weight model: a*j_p = i_p (mod r)
    for p in range(n + 2):
        assert (a * j[p] - i[p]) % r == 0, (r, a, p)
    return IJSeries(r=r, a=a, labels=tuple(labels), i=tuple(i), j=tuple(j))


def dual_pair(r: int, a: int) -> tuple[int, int]:
    """Return (r, b) with b = j_n; the labels of r/b are those of r/a reversed."""
    series = ij_series(r, a)
    return r, series.j[series.n]


def extra_arrow_tails(labels: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Tail vertex of the s-th extra arrow for s = 0..gamma+1 (the l-table).

    Index 0 is the conventional alias for the clockwise arrow 1 -> 0 and
    index gamma+1 for the anticlockwise arrow n -> 0, where
    gamma = sum(alpha_t - 2).  The genuine extra arrows are indices
    1..gamma, with tails ascending by vertex.  For n = 1 every index has
    tail 1.
    """
    validate_labels(list(labels))
    n = len(labels)
    if n == 1:
        return tuple([1] * (labels[0] - 2 + 2))
    tails = [1]
    for t, alpha in enumerate(labels, start=1):
        tails.extend([t] * (alpha - 2))
    tails.append(n)
    return tuple(tails)


@dataclass(frozen=True)
class SigmaData:
    """The sigma-series of a label list together with the u/v index tables.

    sigma_1 = 1 and sigma_s is the smallest vertex t > sigma_{s-1} with
    alpha_t > 2, defaulting to n; u_i / v_i are the largest / smallest
    extra-arrow indices with tail i (including the two aliases).
    """

    labels: tuple[int, ...]
    sigma: tuple[int, ...]
    u: dict[int, int]
    v: dict[int, int]


def sigma_series(labels: list[int] | tuple[int, ...]) -> SigmaData:
    validate_labels(list(labels))
    labels = tuple(labels)
    n = len(labels)
    sigma = [1]
    while sigma[-1] < n:
        nxt = next((t for t in range(sigma[-1] + 1, n + 1) if labels[t - 1] > 2), n)
        sigma.append(nxt)
    tails = extra_arrow_tails(labels)
    u = {}
    v = {}
    for s, tail in enumerate(tails):
        u[tail] = s
        if tail not in v:
            v[tail] = s
    return SigmaData(labels=labels, sigma=tuple(sigma), u=u, v=v)


def riemenschneider_dual(r: int, a: int) -> list[int]:
    """Labels of r/(r-a), built from the sigma-series/u/v formula.

    The expansion interleaves blocks of (u_sigma - v_sigma) twos with the
    bridge entries sigma_{s+1} - sigma_s + 2.
    """
    validate_group_params(r, a)
    data = sigma_series(hj_expand(r, a))
    sigma, u, v = data.sigma, data.u, data.v
    out: list[int] = [2] * (u[sigma[0]] - v[sigma[0]])
    for s in range(1, len(sigma)):
        out.append(sigma[s] - sigma[s - 1] + 2)
        out.extend([2] * (u[sigma[s]] - v[sigma[s]]))
    assert out, (r, a)
    return out


def invariant_generators(r: int, a: int) -> list[Monomial]:
    """Generators of the invariant ring of 1/r(1,a) as explicit monomials.

    In order: x^r; x^{r-a}y; for each vertex t with alpha_t > 2 the block
    x^{i_{t-1} - s*i_t} y^{s*j_t - j_{t-1}} for 2 <= s <= alpha_t - 1;
    finally y^r.
    """
    series = ij_series(r, a)
    i, j = series.i, series.j
    gens = [Monomial(r, 0), Monomial(r - a, 1)]
    for t, alpha in enumerate(series.labels, start=1):
        for s in range(2, alpha):
            gens.append(Monomial(i[t - 1] - s * i[t], s * j[t] - j[t - 1]))
    gens.append(Monomial(0, r))
    # every generator is invariant: weight (ex + a*ey) = 0 (mod r)
    for m in gens:
        assert (m.ex + a * m.ey) % r == 0, (r, a, m)
    return gens
