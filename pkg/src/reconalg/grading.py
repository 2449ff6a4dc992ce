"""Weight model for the cyclic group action and the arrow-labeling map.

A monomial x^p y^q has weight (p + a*q) mod r; the module S_t is spanned
by the monomials of weight t.  The special modules are the S_{i_p}, and
every polynomial of weight i_q - i_p (mod r) is a homomorphism
S_{i_p} -> S_{i_q}, so the bigraded dimension of that Hom-space is 1 in
bidegree (z1, z2) exactly when z1 + a*z2 = i_q - i_p (mod r), else 0.

The map phi sends each arrow to a monomial; paths map to products.  The
arrow bidegrees stored on the quiver are exactly these exponent pairs,
and this module re-derives them from the i/j-series and cross-checks the
weight congruence, so the two constructions validate each other.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cfrac import IJSeries, Monomial
from .quiver import Quiver
from .relations import Relation


def weight(r: int, a: int, m: Monomial) -> int:
    return (m.ex + a * m.ey) % r


def hom_indicator(r: int, a: int, series: IJSeries, p: int, q: int, z1: int, z2: int) -> int:
    """Bigraded dimension (0 or 1) of Hom(S_{i_p}, S_{i_q}) in bidegree (z1,z2)."""
    if not (0 <= p <= series.n and 0 <= q <= series.n):
        raise ValueError(f"vertex out of range: {p}, {q}")
    if z1 < 0 or z2 < 0:
        return 0
    return 1 if (z1 + a * z2 - (series.i[q] - series.i[p])) % r == 0 else 0


def phi(q: Quiver) -> dict[int, Monomial]:
    """Monomial label of each arrow, recomputed from the i/j-series.

    Raises if any label disagrees with the bidegree stored on the quiver or
    violates the weight congruence — the table and the quiver must agree.
    """
    series = q.series
    i, j, r, n = series.i, series.j, q.r, q.n
    table: dict[int, Monomial] = {}
    for arrow in q.arrows:
        if n == 1:
            alpha = q.labels[0]
            by_name = {
                "a1": Monomial(1, 0),
                "a2": Monomial(0, 1),
                "c1": Monomial(r - 1, 0),
                "c2": Monomial(r - 2, 1),
            }
            for t in range(1, alpha - 1):
                by_name[f"k{t}"] = Monomial(r - 2 - t, t + 1)
            m = by_name[arrow.name]
        elif arrow.kind == "clockwise":
            if arrow.tail == 0:
                m = Monomial(i[n] - i[n + 1], 0)  # = x
            else:
                t = arrow.tail
                m = Monomial(i[t - 1] - i[t], 0)
        elif arrow.kind == "anticlockwise":
            t = arrow.tail
            if t == n:
                m = Monomial(0, r - j[n])
            else:
                m = Monomial(0, j[t + 1] - j[t])
        else:
            s = arrow.k_index
            ls = q.l[s]
            m_shift = s - q.V(ls)
            m = Monomial(i[ls - 1] - (m_shift + 1) * i[ls], m_shift * j[ls] - j[ls - 1])
        if (m.ex, m.ey) != arrow.bidegree:
            raise AssertionError(f"bidegree mismatch on {arrow.name}: {m} vs {arrow.bidegree}")
        if (weight(r, q.a, m) - (i[arrow.head] - i[arrow.tail])) % r != 0:
            raise AssertionError(f"weight mismatch on {arrow.name}")
        table[arrow.id] = m
    return table


def path_monomial(table: dict[int, Monomial], arrows: tuple[int, ...]) -> Monomial:
    m = Monomial(0, 0)
    for i in arrows:
        m = m * table[i]
    return m


@dataclass
class HomogeneityReport:
    ok: bool
    checked: int
    failures: list[dict] = field(default_factory=list)


def check_homogeneity(q: Quiver, rels: list[Relation], table: dict[int, Monomial]) -> HomogeneityReport:
    """Check every relation has equal bidegrees and equal monomial products."""
    report = HomogeneityReport(ok=True, checked=len(rels))
    for idx, rel in enumerate(rels):
        lhs_m = path_monomial(table, rel.lhs.arrows)
        rhs_m = path_monomial(table, rel.rhs.arrows)
        if lhs_m != rhs_m or rel.lhs.bidegree != rel.rhs.bidegree:
            report.ok = False
            report.failures.append(
                {"relation": idx, "lhs_monomial": str(lhs_m), "rhs_monomial": str(rhs_m)}
            )
    return report


def specials_dot(q: Quiver) -> str:
    """DOT digraph of the labeled endomorphism diagram of the special modules."""
    table = phi(q)
    lines = ["digraph specials {"]
    for p in range(q.num_vertices):
        ip = q.series.i[p]
        label = "R" if ip == q.r else f"S_{ip}"
        lines.append(f'  {p} [label="{label}"];')
    for arrow in q.arrows:
        lines.append(f'  {arrow.tail} -> {arrow.head} [label="{table[arrow.id]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
