"""Projective resolutions of the vertex simples and exactness verification.

For the one-dimensional simple at vertex j there is a complex

    P2 --d2--> P1 --d1--> P0 -> D_j -> 0

with P0 = e_jA, P1 = sum of e_{h(a)}A over arrows a with tail j, and
P2 = sum of e_{h(R)}A over relations R with tail j.  The differentials
are d1: (f_a) -> sum a f_a and d2: (g_R) -> (sum del_a(R) g_R)_a where
del_a(p) strips a leading arrow a from the path p (zero otherwise) and
relations are taken as differences lhs - rhs.

For vertices t >= 1 this complex is already a resolution (d2 is
injective).  For vertex 0 with some label > 2 the kernel of d2 is free:
with gamma = sum(alpha_t - 2) and l_i the tail of the i-th extra arrow,
the i-th generator of P3 = sum_{i=1..gamma} e_{l_i}A maps to the columns
i, i+1 of P2 = (e_0 A)^{gamma+1} with entries (AN(0,l_i), -CL(0,l_i)).

Exactness is verified one bidegree at a time over the class basis of the
truncated algebra, by exact integer rank computations, within a safety
margin below the truncation bound.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cfrac import hj_expand
from .pathalg import ClassEngine, build_quiver_cached
from .quiver import Quiver
from .relations import (
    Relation,
    acw_path,
    cw_path,
    generate_relations,
    make_path,
    relations_with_source,
)


@dataclass(frozen=True)
class Summand:
    vertex: int
    shift: tuple[int, int]


@dataclass(frozen=True)
class SignedPath:
    sign: int  # +1 or -1
    arrows: tuple[int, ...]


# matrix entry: a formal sum of signed paths acting by left multiplication
Entry = tuple[SignedPath, ...]


@dataclass
class ComplexDescription:
    """terms[k] lists the summands of P_k; maps[k] is the matrix of
    d_{k+1}: P_{k+1} -> P_k with rows indexed by terms[k] and columns by
    terms[k+1]."""

    vertex: int
    labels: tuple[int, ...]
    terms: list[list[Summand]]
    maps: list[list[list[Entry]]]

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def shape(self) -> list[int]:
        return [len(term) for term in self.terms]


def _entry_degree(q: Quiver, entry: Entry) -> int:
    deg = 0
    for sp in entry:
        deg = max(deg, sum(q.arrows[i].bidegree[0] + q.arrows[i].bidegree[1] for i in sp.arrows))
    return deg


def _path_bidegree(q: Quiver, arrows: tuple[int, ...]) -> tuple[int, int]:
    z1 = sum(q.arrows[i].bidegree[0] for i in arrows)
    z2 = sum(q.arrows[i].bidegree[1] for i in arrows)
    return (z1, z2)


def _oriented_vertex0_relations(q: Quiver, rels: list[Relation]) -> list[Relation]:
    """Tail-0 relations in generation order, clockwise side first.

    For n >= 2 every relation starting at vertex 0 has exactly one side
    beginning with the clockwise arrow 0 -> n; orienting that side as the
    lhs makes the t-th relation (1-indexed) read
    CL(0, l_t) k_t = AN(0, l_{t-1}) k_{t-1}, the form the vertex-0 third
    syzygy is written against.
    """
    out = []
    c0n = q.clockwise_into(q.n).id
    for rel in relations_with_source(q, rels, 0):
        starts = (rel.lhs.arrows[0] == c0n, rel.rhs.arrows[0] == c0n)
        assert starts[0] != starts[1], rel
        out.append(rel if starts[0] else Relation(rel.rhs, rel.lhs))
    return out


def resolution_of_simple(q: Quiver, rels: list[Relation], t: int) -> ComplexDescription:
    if not (0 <= t <= q.n):
        raise ValueError(f"vertex {t} out of range")
    arrows_out = q.arrows_from(t)
    p0 = [Summand(t, (0, 0))]
    p1 = [Summand(x.head, x.bidegree) for x in arrows_out]
    d1 = [[(SignedPath(1, (x.id,)),) for x in arrows_out]]

    if t == 0 and q.n >= 2:
        rels_t: list[Relation] = _oriented_vertex0_relations(q, rels)
    elif t == 0:
        # n = 1: generation order already lists a1 K_j = a2 K_{j-1} for
        # j = 1..alpha-1 along the chain K = (c1, c2, k_1, ...), the exact
        # analogue of the clockwise-side-first orientation
        rels_t = relations_with_source(q, rels, 0)
        a1 = q.arrow_by_name("a1").id
        assert all(rel.lhs.arrows[0] == a1 for rel in rels_t)
    else:
        rels_t = relations_with_source(q, rels, t)
    p2 = [Summand(rel.target, rel.bidegree) for rel in rels_t]
    d2: list[list[Entry]] = []
    for x in arrows_out:
        row: list[Entry] = []
        for rel in rels_t:
            parts = []
            if rel.lhs.arrows[0] == x.id:
                parts.append(SignedPath(1, rel.lhs.arrows[1:]))
            if rel.rhs.arrows[0] == x.id:
                parts.append(SignedPath(-1, rel.rhs.arrows[1:]))
            row.append(tuple(parts))
        d2.append(row)

    terms = [p0, p1, p2]
    maps = [d1, d2]

    if t == 0 and q.gamma >= 1:
        gamma = q.gamma
        p3 = []
        d3: list[list[Entry]] = [[() for _ in range(gamma)] for _ in range(gamma + 1)]
        for i in range(1, gamma + 1):
            li = q.l[i]
            if q.n >= 2:
                an = acw_path(q, 0, li)
                cl = cw_path(q, 0, li)
            else:
                # y-like and x-like arrows 0 -> 1 play the roles of the
                # anticlockwise and clockwise composites
                an = make_path(q, [q.arrow_by_name("a2")])
                cl = make_path(q, [q.arrow_by_name("a1")])
            shift = (
                rels_t[i - 1].bidegree[0] + an.bidegree[0],
                rels_t[i - 1].bidegree[1] + an.bidegree[1],
            )
            alt = (
                rels_t[i].bidegree[0] + cl.bidegree[0],
                rels_t[i].bidegree[1] + cl.bidegree[1],
            )
            assert shift == alt, (i, shift, alt)
            p3.append(Summand(li, shift))
            d3[i - 1][i - 1] = (SignedPath(1, an.arrows),)
            d3[i][i - 1] = (SignedPath(-1, cl.arrows),)
        terms.append(p3)
        maps.append(d3)

    cx = ComplexDescription(vertex=t, labels=q.labels, terms=terms, maps=maps)
    _validate_shape(q, cx)
    return cx


def _validate_shape(q: Quiver, cx: ComplexDescription) -> None:
    t = cx.vertex
    shape = cx.shape()
    if q.n == 1:
        alpha = q.labels[0]
        if t == 1:
            assert shape == [1, alpha, alpha - 1], shape
        elif alpha == 2:
            assert shape == [1, 2, 1], shape
        else:
            assert shape == [1, 2, alpha - 1, alpha - 2], shape
    elif t >= 1:
        alpha = q.labels[t - 1]
        expected = [1, alpha, alpha - 1] if alpha > 2 else [1, 2, 1]
        assert shape == expected, (shape, expected)
    elif q.gamma == 0:
        assert shape == [1, 2, 1], shape
    else:
        assert shape == [1, 2, q.gamma + 1, q.gamma], shape
    # shift coherence: every nonzero entry raises degree consistently
    for k, matrix in enumerate(cx.maps):
        rows, cols = cx.terms[k], cx.terms[k + 1]
        for i, row in enumerate(matrix):
            for j, entry in enumerate(row):
                for sp in entry:
                    bid = _path_bidegree(q, sp.arrows)
                    assert (
                        rows[i].shift[0] + bid[0] == cols[j].shift[0]
                        and rows[i].shift[1] + bid[1] == cols[j].shift[1]
                    ), (k, i, j)
                    assert q.arrows[sp.arrows[0]].tail == rows[i].vertex
                    assert q.arrows[sp.arrows[-1]].head == cols[j].vertex


def safety_margin(q: Quiver, cx: ComplexDescription) -> int:
    return max(
        (_entry_degree(q, entry) for matrix in cx.maps for row in matrix for entry in row),
        default=0,
    )


def _exact_rank(matrix: list[list[int]]) -> int:
    """Rank of an integer matrix by exact fraction elimination."""
    m = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for col in range(cols):
        pivot = next((i for i in range(rank, rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        for i in range(rank + 1, rows):
            if m[i][col] != 0:
                factor = m[i][col] * inv
                m[i] = [a - factor * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


@dataclass
class ExactnessReport:
    vertex: int
    D: int
    margin: int
    ok: bool
    d_squared_ok: bool
    bidegrees_checked: int
    pd: int
    failures: list[dict] = field(default_factory=list)


def verify_exactness(
    q: Quiver,
    cx: ComplexDescription,
    engine: ClassEngine,
    D: int | None = None,
) -> ExactnessReport:
    """Check the complex resolves the vertex simple in every safe bidegree.

    A bidegree is safe when z1+z2 <= D - margin, the margin being the
    largest total degree of a matrix entry; truncation artifacts above
    that line are not evidence against exactness.
    """
    if D is None:
        D = engine.D
    if D > engine.D:
        raise ValueError("degree bound exceeds the engine's bound")
    margin = safety_margin(q, cx)
    report = ExactnessReport(
        vertex=cx.vertex,
        D=D,
        margin=margin,
        ok=True,
        d_squared_ok=True,
        bidegrees_checked=0,
        pd=cx.length,
    )

    # d o d = 0, symbolically via normal-form classes
    for k in range(len(cx.maps) - 1):
        upper, lower = cx.maps[k + 1], cx.maps[k]
        for i in range(len(cx.terms[k])):
            for c in range(len(cx.terms[k + 2])):
                coeffs: dict[int, int] = {}
                for j in range(len(cx.terms[k + 1])):
                    for sp1 in lower[i][j]:
                        for sp2 in upper[j][c]:
                            arrows = sp1.arrows + sp2.arrows
                            root = engine.class_of(arrows)
                            coeffs[root] = coeffs.get(root, 0) + sp1.sign * sp2.sign
                if any(v != 0 for v in coeffs.values()):
                    report.d_squared_ok = False
                    report.ok = False
                    report.failures.append(
                        {"kind": "d_squared", "maps": [k, k + 1], "row": i, "col": c}
                    )
    if not report.d_squared_ok:
        return report

    # class bases: (source vertex, bidegree) -> [(root, target)]
    cells = engine.cell_roots()
    by_src: dict[tuple[int, int, int], list[int]] = {}
    for (src, _tgt, z1, z2), roots in cells.items():
        by_src.setdefault((src, z1, z2), []).extend(roots)
    for key in by_src:
        by_src[key].sort()

    def basis(term: list[Summand], z: tuple[int, int]) -> list[tuple[int, int]]:
        out = []
        for idx, s in enumerate(term):
            w1, w2 = z[0] - s.shift[0], z[1] - s.shift[1]
            if w1 < 0 or w2 < 0:
                continue
            for root in by_src.get((s.vertex, w1, w2), ()):
                out.append((idx, root))
        return out

    top = len(cx.terms) - 1
    top_nonzero = False
    for z1 in range(D - margin + 1):
        for z2 in range(D - margin + 1 - z1):
            z = (z1, z2)
            report.bidegrees_checked += 1
            bases = [basis(term, z) for term in cx.terms]
            dims = [len(b) for b in bases]
            if dims[top] > 0:
                top_nonzero = True
            euler = sum((-1) ** k * d for k, d in enumerate(dims))
            expected_euler = 1 if z == (0, 0) else 0
            if euler != expected_euler:
                report.ok = False
                report.failures.append({"kind": "euler", "bidegree": [z1, z2], "euler": euler})
                continue
            ranks = []
            for k, matrix in enumerate(cx.maps):
                rows = {key: idx for idx, key in enumerate(bases[k])}
                numeric = [[0] * dims[k + 1] for _ in range(dims[k])]
                for col, (j, root) in enumerate(bases[k + 1]):
                    rep = engine.representative(root)
                    for i in range(len(cx.terms[k])):
                        for sp in matrix[i][j]:
                            image_root = engine.class_of(sp.arrows + rep)
                            numeric[rows[(i, image_root)]][col] += sp.sign
                ranks.append(_exact_rank(numeric))
            # exactness at P0: coker d1 is D_j, one-dimensional at (0,0)
            checks = [
                ("coker_d1", ranks[0] == dims[0] - (1 if z == (0, 0) else 0)),
                ("exact_P1", dims[1] - ranks[0] == ranks[1]),
            ]
            if top >= 3:
                checks.append(("exact_P2", dims[2] - ranks[1] == ranks[2]))
            checks.append(("top_injective", ranks[top - 1] == dims[top]))
            for name, passed in checks:
                if not passed:
                    report.ok = False
                    report.failures.append(
                        {"kind": name, "bidegree": [z1, z2], "dims": dims, "ranks": ranks}
                    )
    if not top_nonzero:
        report.ok = False
        report.failures.append({"kind": "top_term_vacuous"})
    return report


@dataclass
class GlobalDimensionResult:
    r: int
    a: int
    value: int
    pd_table: dict[int, int]
    shapes: dict[int, list[int]]


def global_dimension(r: int, a: int) -> GlobalDimensionResult:
    """Global dimension with the per-vertex projective dimension table.

    pd(D_t) = 2 for t >= 1; pd(D_0) = 2 exactly when every label is 2
    (equivalently a = r-1), else 3.  The pd values are read off the
    resolution shapes; full exactness checking is a separate, heavier
    verification (verify_exactness).
    """
    q = build_quiver_cached(r, a)
    rels = generate_relations(q)
    pd_table = {}
    shapes = {}
    for t in range(q.num_vertices):
        cx = resolution_of_simple(q, rels, t)
        pd_table[t] = cx.length
        shapes[t] = cx.shape()
    value = max(pd_table.values())
    assert value == (2 if a == r - 1 else 3)
    return GlobalDimensionResult(r=r, a=a, value=value, pd_table=pd_table, shapes=shapes)


def simple_count(r: int, a: int) -> int:
    """Number of one-dimensional vertex simples (= number of vertices)."""
    return len(hj_expand(r, a)) + 1
