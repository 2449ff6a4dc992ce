"""Paths in the quiver and the defining relations of the algebra.

Composition is left-to-right: in a product xy the arrow x is traversed
first.  A path records the ordered arrow ids, its source (tail of the
first arrow), target (head of the last arrow) and bidegree (componentwise
sum of arrow bidegrees).

The relations come in vertex-indexed steps.  Writing CL(i,j) / AN(i,j)
for the composite of clockwise / anticlockwise arrows from i to j (the
full once-around cycle when i = j, never the empty path), with k_0 and
k_{gamma+1} the aliases for the clockwise arrow 1 -> 0 and anticlockwise
arrow n -> 0:

* Step 1, alpha_1 = 2:   c_{1,0} a_{0,1} = a_{1,2} c_{2,1}
* Step 1, alpha_1 > 2:   k_s a_{0,1} = k_{s+1} CL(0,1)  and
                         a_{0,1} k_s = CL(0,1) k_{s+1}  for 0 <= s < u_1;
                         k_{u_1} a_{0,1} = a_{1,2} c_{2,1}
* Step t (1 < t < n), alpha_t = 2:  c_{t,t-1} a_{t-1,t} = a_{t,t+1} c_{t+1,t}
* Step t, alpha_t > 2:   c_{t,t-1} a_{t-1,t} = k_{v_t} CL(0,t);
                         CL(0,t) k_{v_t} = AN(0,l_{V_t}) k_{V_t};
                         k_s AN(0,t) = k_{s+1} CL(0,t)  and
                         AN(0,t) k_s = CL(0,t) k_{s+1}  for v_t <= s < u_t;
                         k_{u_t} AN(0,t) = a_{t,t+1} c_{t+1,t}
* Step n, alpha_n = 2:   c_{n,n-1} a_{n-1,n} = a_{n,0} c_{0,n};
                         c_{0,n} a_{n,0} = AN(0,l_{V_n}) k_{V_n}
* Step n, alpha_n > 2:   as step t but with CL(0,n) = c_{0,n} and without
                         the final a_{t,t+1} c_{t+1,t} relation.

For n = 1 (arrows a1, a2 from 0 to 1 and c1, c2, k_1..k_{alpha-2} from
1 to 0): c2 a1 = c1 a2 and a1 c2 = a2 c1; if alpha_1 > 2 also
k1 a1 = c2 a2 and a1 k1 = a2 c2, plus k_t a1 = k_{t-1} a2 and
a1 k_t = a2 k_{t-1} for 2 <= t <= alpha_1 - 2.
"""
from __future__ import annotations

from dataclasses import dataclass

from .quiver import Arrow, Quiver


@dataclass(frozen=True)
class Path:
    arrows: tuple[int, ...]
    source: int
    target: int
    bidegree: tuple[int, int]

    @property
    def total_degree(self) -> int:
        return self.bidegree[0] + self.bidegree[1]


def make_path(q: Quiver, arrows: list[Arrow]) -> Path:
    if not arrows:
        raise ValueError("a path must contain at least one arrow")
    z1 = z2 = 0
    for prev, nxt in zip(arrows, arrows[1:]):
        if prev.head != nxt.tail:
            raise ValueError(f"arrows do not compose: {prev.name} then {nxt.name}")
    for x in arrows:
        z1 += x.bidegree[0]
        z2 += x.bidegree[1]
    return Path(
        arrows=tuple(x.id for x in arrows),
        source=arrows[0].tail,
        target=arrows[-1].head,
        bidegree=(z1, z2),
    )


def path_by_names(q: Quiver, names: list[str]) -> Path:
    return make_path(q, [q.arrow_by_name(name) for name in names])


def cw_path(q: Quiver, i: int, j: int) -> Path:
    """Composite of clockwise arrows from i to j; the full cycle when i = j."""
    arrows = []
    t = i
    while True:
        arrow = [x for x in q.arrows if x.kind == "clockwise" and x.tail == t][0]
        arrows.append(arrow)
        t = arrow.head
        if t == j:
            break
    return make_path(q, arrows)


def acw_path(q: Quiver, i: int, j: int) -> Path:
    """Composite of anticlockwise arrows from i to j; the full cycle when i = j."""
    arrows = []
    t = i
    while True:
        arrow = [x for x in q.arrows if x.kind == "anticlockwise" and x.tail == t][0]
        arrows.append(arrow)
        t = arrow.head
        if t == j:
            break
    return make_path(q, arrows)


@dataclass(frozen=True)
class Relation:
    lhs: Path
    rhs: Path

    def __post_init__(self) -> None:
        if self.lhs.source != self.rhs.source or self.lhs.target != self.rhs.target:
            raise ValueError(f"relation sides have different endpoints: {self}")
        if self.lhs.bidegree != self.rhs.bidegree:
            raise ValueError(f"relation sides have different bidegrees: {self}")

    @property
    def source(self) -> int:
        return self.lhs.source

    @property
    def target(self) -> int:
        return self.lhs.target

    @property
    def bidegree(self) -> tuple[int, int]:
        return self.lhs.bidegree

    def as_unordered(self) -> frozenset[tuple[int, ...]]:
        return frozenset((self.lhs.arrows, self.rhs.arrows))


def _concat(q: Quiver, *paths: Path) -> Path:
    arrows = [q.arrows[i] for p in paths for i in p.arrows]
    return make_path(q, arrows)


def _arrow_path(q: Quiver, arrow: Arrow) -> Path:
    return make_path(q, [arrow])


def generate_relations(q: Quiver) -> list[Relation]:
    if q.n == 1:
        return _relations_n1(q)
    rels: list[Relation] = []
    n = q.n
    k = lambda s: _arrow_path(q, q.k_arrow(s))
    a = lambda t: _arrow_path(q, q.anticlockwise_into((t + 1) % (n + 1)))
    c = lambda t: _arrow_path(q, q.clockwise_into(t - 1 if t >= 1 else n))

    for t in range(1, n + 1):
        alpha = q.labels[t - 1]
        if t == 1:
            if alpha == 2:
                rels.append(Relation(_concat(q, c(1), a(0)), _concat(q, a(1), c(2))))
            else:
                u1 = q.u(1)
                for s in range(0, u1):
                    cl01 = cw_path(q, 0, 1)
                    rels.append(Relation(_concat(q, k(s), a(0)), _concat(q, k(s + 1), cl01)))
                    rels.append(Relation(_concat(q, a(0), k(s)), _concat(q, cl01, k(s + 1))))
                rels.append(Relation(_concat(q, k(u1), a(0)), _concat(q, a(1), c(2))))
        elif t < n:
            if alpha == 2:
                rels.append(Relation(_concat(q, c(t), a(t - 1)), _concat(q, a(t), c(t + 1))))
            else:
                vt, ut, Vt = q.v(t), q.u(t), q.V(t)
                cl0t = cw_path(q, 0, t)
                an0t = acw_path(q, 0, t)
                rels.append(Relation(_concat(q, c(t), a(t - 1)), _concat(q, k(vt), cl0t)))
                rels.append(
                    Relation(
                        _concat(q, cl0t, k(vt)),
                        _concat(q, acw_path(q, 0, q.l[Vt]), k(Vt)),
                    )
                )
                for s in range(vt, ut):
                    rels.append(Relation(_concat(q, k(s), an0t), _concat(q, k(s + 1), cl0t)))
                    rels.append(Relation(_concat(q, an0t, k(s)), _concat(q, cl0t, k(s + 1))))
                rels.append(Relation(_concat(q, k(ut), an0t), _concat(q, a(t), c(t + 1))))
        else:  # t == n
            c0n = cw_path(q, 0, n)
            if alpha == 2:
                rels.append(Relation(_concat(q, c(n), a(n - 1)), _concat(q, a(n), c0n)))
                Vn = q.V(n)
                rels.append(
                    Relation(
                        _concat(q, c0n, a(n)),
                        _concat(q, acw_path(q, 0, q.l[Vn]), k(Vn)),
                    )
                )
            else:
                vn, un, Vn = q.v(n), q.u(n), q.V(n)
                an0n = acw_path(q, 0, n)
                rels.append(Relation(_concat(q, c(n), a(n - 1)), _concat(q, k(vn), c0n)))
                rels.append(
                    Relation(
                        _concat(q, c0n, k(vn)),
                        _concat(q, acw_path(q, 0, q.l[Vn]), k(Vn)),
                    )
                )
                for s in range(vn, un):
                    rels.append(Relation(_concat(q, k(s), an0n), _concat(q, k(s + 1), c0n)))
                    rels.append(Relation(_concat(q, an0n, k(s)), _concat(q, c0n, k(s + 1))))
    assert len(rels) == relation_count(list(q.labels))
    return rels


def _relations_n1(q: Quiver) -> list[Relation]:
    alpha = q.labels[0]
    p = lambda names: path_by_names(q, names)
    rels = [
        Relation(p(["c2", "a1"]), p(["c1", "a2"])),
        Relation(p(["a1", "c2"]), p(["a2", "c1"])),
    ]
    if alpha > 2:
        rels.append(Relation(p(["k1", "a1"]), p(["c2", "a2"])))
        rels.append(Relation(p(["a1", "k1"]), p(["a2", "c2"])))
        for t in range(2, alpha - 1):
            rels.append(Relation(p([f"k{t}", "a1"]), p([f"k{t - 1}", "a2"])))
            rels.append(Relation(p(["a1", f"k{t}"]), p(["a2", f"k{t - 1}"])))
    return rels


def relation_count(labels: list[int]) -> int:
    n = len(labels)
    if n == 1:
        return 2 if labels[0] == 2 else 2 * labels[0] - 2
    total = 0
    for t, alpha in enumerate(labels, start=1):
        if t < n:
            total += 1 if alpha == 2 else 2 * alpha - 3
        else:
            total += 2 if alpha == 2 else 2 * alpha - 2
    return total


def relations_with_source(q: Quiver, rels: list[Relation], vertex: int) -> list[Relation]:
    """Relations whose paths start at the given vertex, in generation order."""
    return [rel for rel in rels if rel.source == vertex]


def relations_to_json_dict(q: Quiver, rels: list[Relation]) -> dict:
    return {
        "labels": list(q.labels),
        "relations": [
            {
                "lhs": [q.arrows[i].name for i in rel.lhs.arrows],
                "rhs": [q.arrows[i].name for i in rel.rhs.arrows],
                "source": rel.source,
                "target": rel.target,
                "bidegree": list(rel.bidegree),
            }
            for rel in rels
        ],
    }


def relations_to_tex(q: Quiver, rels: list[Relation]) -> str:
    def tex_name(arrow: Arrow) -> str:
        if q.n == 1:
            return {"c1": "c_1", "c2": "c_2", "a1": "a_1", "a2": "a_2"}.get(
                arrow.name, "k_{%d}" % arrow.k_index
            )
        if arrow.kind == "extra":
            return "k_{%d}" % arrow.k_index
        letter = "c" if arrow.kind == "clockwise" else "a"
        return "%s_{%d,%d}" % (letter, arrow.tail, arrow.head)

    lines = []
    for rel in rels:
        lhs = "".join(tex_name(q.arrows[i]) for i in rel.lhs.arrows)
        rhs = "".join(tex_name(q.arrows[i]) for i in rel.rhs.arrows)
        lines.append(f"{lhs} &= {rhs} \\\\")
    return "\n".join(lines) + "\n"
