"""Chart atlas of the minimal resolution.

The minimal resolution of the cyclic quotient singularity is covered by
n+1 affine charts, the t-th having coordinate functions x^{i_t}/y^{j_t}
and y^{j_{t+1}}/x^{i_{t+1}} — represented here as Laurent exponent
vectors, so every gluing statement becomes an integer-vector identity.

Each chart also arises as an open set of scalar quiver representations
with dimension vector (1,..,1): after fixing a gauge (a spanning set of
arrows scaled to 1) the remaining arrows are determined by the two
coordinate arrows via the relations.  `chart_representation` performs
that propagation over exact rationals and checks every relation.  For
stability (with the weight that penalizes vertex 0) a representation is
stable exactly when every vertex is reachable from vertex 0 through
nonzero arrows.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cfrac import hj_expand, ij_series, validate_group_params
from .pathalg import build_quiver_cached
from .quiver import Quiver
from .relations import Relation, generate_relations


@dataclass(frozen=True)
class Chart:
    index: int
    coord_c: tuple[int, int]  # exponents of x^{i_t} / y^{j_t}
    coord_d: tuple[int, int]  # exponents of y^{j_{t+1}} / x^{i_{t+1}}

    def determinant(self) -> int:
        return self.coord_c[0] * self.coord_d[1] - self.coord_d[0] * self.coord_c[1]


def charts(r: int, a: int) -> list[Chart]:
    series = ij_series(r, a)
    out = []
    for t in range(series.n + 1):
        chart = Chart(
            index=t,
            coord_c=(series.i[t], -series.j[t]),
            coord_d=(-series.i[t + 1], series.j[t + 1]),
        )
        assert chart.determinant() == r
        out.append(chart)
    return out


def transition_check(r: int, a: int, t: int) -> bool:
    """Exponent identities gluing chart t-1 to chart t.

    First coordinate of chart t is the inverse of the second of chart t-1;
    the second of chart t is (first of t-1) * (second of t-1)^alpha_t.
    """
    series = ij_series(r, a)
    if not (1 <= t <= series.n):
        raise ValueError(f"need 1 <= t <= n, got t={t}")
    alpha = series.labels[t - 1]
    atlas = charts(r, a)
    prev, cur = atlas[t - 1], atlas[t]
    first = cur.coord_c == (-prev.coord_d[0], -prev.coord_d[1])
    second = cur.coord_d == (
        prev.coord_c[0] + alpha * prev.coord_d[0],
        prev.coord_c[1] + alpha * prev.coord_d[1],
    )
    return first and second


# -- scalar representations -------------------------------------------------

Representation = dict[int, Fraction]


def coordinate_arrows(q: Quiver, t: int) -> tuple[int, int]:
    """Arrow ids of the chart-t coordinate pair (clockwise into t,
    anticlockwise out of t)."""
    c_coord = q.clockwise_into(t)
    a_coord = q.anticlockwise_into((t + 1) % (q.n + 1))
    assert a_coord.tail == t
    return c_coord.id, a_coord.id


def gauge_arrows(q: Quiver, t: int) -> list[int]:
    """Arrows scaled to 1 in chart t: the clockwise chain from vertex 0
    down to vertex t+1 and the anticlockwise chain from 0 up to t."""
    n = q.n
    ids = []
    if t <= n - 1:
        ids.append(q.clockwise_into(n).id)  # arrow 0 -> n
        for tail in range(n, t + 1, -1):
            ids.append(q.clockwise_into(tail - 1).id)
    for tail in range(0, t):
        ids.append(q.anticlockwise_into(tail + 1).id)
    return ids


def satisfies_relations(rep: Representation, rels: list[Relation]) -> bool:
    for rel in rels:
        lhs = Fraction(1)
        for i in rel.lhs.arrows:
            lhs *= rep[i]
        rhs = Fraction(1)
        for i in rel.rhs.arrows:
            rhs *= rep[i]
        if lhs != rhs:
            return False
    return True


def chart_representation(
    r: int, a: int, t: int, point: tuple[Fraction | int, Fraction | int]
) -> Representation:
    """The scalar representation of chart t at the given coordinate point.

    Only defined for n >= 2 (a single exceptional curve needs no atlas of
    representations: both charts are coordinate planes).
    """
    q = build_quiver_cached(r, a)
    if q.n < 2:
        raise ValueError("chart representations need at least two exceptional curves")
    if not (0 <= t <= q.n):
        raise ValueError(f"chart index {t} out of range")
    rels = generate_relations(q)
    values: Representation = {}
    for arrow_id in gauge_arrows(q, t):
        values[arrow_id] = Fraction(1)
    c_id, a_id = coordinate_arrows(q, t)
    values[c_id] = Fraction(point[0])
    values[a_id] = Fraction(point[1])

    # propagate: whenever one relation side is known and the other has a
    # single unknown arrow occurring once with nonzero known cofactor,
    # solve for it
    changed = True
    while changed and len(values) < len(q.arrows):
        changed = False
        for rel in rels:
            for side, other in ((rel.lhs, rel.rhs), (rel.rhs, rel.lhs)):
                unknowns = [i for i in side.arrows if i not in values]
                if len(unknowns) != 1 or any(i not in values for i in other.arrows):
                    continue
                unknown = unknowns[0]
                if side.arrows.count(unknown) != 1:
                    continue
                cofactor = Fraction(1)
                for i in side.arrows:
                    if i != unknown:
                        cofactor *= values[i]
                if cofactor == 0:
                    continue
                product = Fraction(1)
                for i in other.arrows:
                    product *= values[i]
                values[unknown] = product / cofactor
                changed = True
    if len(values) < len(q.arrows):
        missing = [x.name for x in q.arrows if x.id not in values]
        raise RuntimeError(f"propagation left arrows undetermined: {missing}")
    if not satisfies_relations(values, rels):
        raise RuntimeError("propagated representation violates a relation")
    return values


def stability_check(q: Quiver, rep: Representation) -> bool:
    """True iff every vertex is reachable from vertex 0 via nonzero arrows."""
    seen = {0}
    frontier = [0]
    while frontier:
        v = frontier.pop()
        for arrow in q.arrows_from(v):
            if rep.get(arrow.id, Fraction(0)) != 0 and arrow.head not in seen:
                seen.add(arrow.head)
                frontier.append(arrow.head)
    return len(seen) == q.num_vertices


def chart_overlap_iso(
    r: int, a: int, t: int, point: tuple[Fraction | int, Fraction | int]
) -> dict[int, Fraction]:
    """Base-change scalars conjugating the chart t-1 representation at
    (p, q) (q != 0) to the chart t representation at (1/q, p*q^alpha_t).

    Returns per-vertex scalars lambda with lambda_0 = 1 such that for
    every arrow: new = lambda_head * old / lambda_tail.
    """
    quiv = build_quiver_cached(r, a)
    if not (1 <= t <= quiv.n):
        raise ValueError(f"need 1 <= t <= n, got t={t}")
    p_val, q_val = Fraction(point[0]), Fraction(point[1])
    if q_val == 0:
        raise ValueError("point is not in the chart overlap (second coordinate 0)")
    alpha = quiv.labels[t - 1]
    rep_old = chart_representation(r, a, t - 1, (p_val, q_val))
    rep_new = chart_representation(r, a, t, (1 / q_val, p_val * q_val**alpha))

    lam: dict[int, Fraction] = {0: Fraction(1)}
    # propagate scalars along arrows nonzero in both representations,
    # treating them as undirected constraints
    changed = True
    while changed and len(lam) < quiv.num_vertices:
        changed = False
        for arrow in quiv.arrows:
            old, new = rep_old[arrow.id], rep_new[arrow.id]
            if old == 0 or new == 0:
                continue
            if arrow.tail in lam and arrow.head not in lam:
                lam[arrow.head] = lam[arrow.tail] * new / old
                changed = True
            elif arrow.head in lam and arrow.tail not in lam:
                lam[arrow.tail] = lam[arrow.head] * old / new
                changed = True
    if len(lam) < quiv.num_vertices:
        raise RuntimeError("base change does not propagate to every vertex")
    for arrow in quiv.arrows:
        if rep_new[arrow.id] * lam[arrow.tail] != lam[arrow.head] * rep_old[arrow.id]:
            raise RuntimeError(f"conjugation fails on arrow {arrow.name}")
    return lam


@dataclass(frozen=True)
class DualGraph:
    labels: tuple[int, ...]

    @property
    def node_labels(self) -> tuple[int, ...]:
        return tuple(-alpha for alpha in self.labels)


def dual_graph(r: int, a: int) -> DualGraph:
    """Chain of exceptional curves labeled by self-intersection numbers."""
    validate_group_params(r, a)
    graph = DualGraph(labels=tuple(hj_expand(r, a)))
    # round trip: negating the node labels recovers the expansion
    assert [-x for x in graph.node_labels] == hj_expand(r, a)
    return graph


def dual_graph_dot(r: int, a: int) -> str:
    graph = dual_graph(r, a)
    lines = ["graph dual {"]
    for idx, label in enumerate(graph.node_labels, start=1):
        lines.append(f'  {idx} [label="{label}"];')
    for idx in range(1, len(graph.labels)):
        lines.append(f"  {idx} -- {idx + 1};")
    lines.append("}")
    return "\n".join(lines) + "\n"
