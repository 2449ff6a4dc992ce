"""Truncated path-algebra engine.

The algebra is the path algebra of the quiver modulo binomial relations
(each relation is a difference of two paths with unit coefficients), so
the bigraded dimension of every component e_p A e_q is the number of
equivalence classes of paths p -> q of that bidegree under the smallest
equivalence closed under replacing a relation side occurring as a
contiguous subpath by the other side.

Two implementations of that closure are provided and cross-checked in
tests:

* a literal one (`enumerate_paths` + `congruence_closure`) that lists
  every path up to the degree bound and rewrites subpaths — transparent
  but exponential in the bound;
* `ClassEngine`, a congruence closure over a DAG of path classes: a node
  is either the empty path at a vertex or the extension of a class by a
  single arrow on the left.  Relation instances are merged by folding
  each relation side onto every class, and a union-find with signature
  propagation keeps extension nodes consistent (classic congruence
  closure).  Since every rewrite is a ground relation instance followed
  by left-extension, the induced partition of full paths is identical to
  the literal closure, but the engine runs in time proportional to the
  number of classes rather than the number of paths.

Class counts only cover total degree z1+z2 <= D; nothing is claimed
beyond the bound.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .grading import hom_indicator
from .quiver import Quiver, build_quiver
from .relations import Path, Relation, generate_relations


class ResourceLimitExceeded(Exception):
    """Raised when a projected enumeration exceeds the configured cap."""


DEFAULT_MAX_PATHS = 2_000_000
DEFAULT_MAX_NODES = 5_000_000


def projected_path_count(q: Quiver, source: int, D: int) -> int:
    """Number of composable arrow sequences from source with degree <= D."""
    # f[v][d] = number of paths starting at v with total degree exactly d
    f = [[0] * (D + 1) for _ in range(q.num_vertices)]
    for v in range(q.num_vertices):
        f[v][0] = 1
    out = [[(x.head, x.bidegree[0] + x.bidegree[1]) for x in q.arrows_from(v)] for v in range(q.num_vertices)]
    for d in range(1, D + 1):
        for v in range(q.num_vertices):
            total = 0
            for head, deg in out[v]:
                if deg <= d:
                    total += f[head][d - deg]
            f[v][d] = total
    return sum(f[source][1:]) if D >= 1 else 0


@dataclass
class PathBucket:
    source: int
    bidegree: tuple[int, int]
    paths_by_target: dict[int, list[Path]] = field(default_factory=dict)

    @property
    def paths(self) -> list[Path]:
        return [p for target in sorted(self.paths_by_target) for p in self.paths_by_target[target]]


def enumerate_paths(
    q: Quiver, source: int, D: int, max_paths: int = DEFAULT_MAX_PATHS
) -> dict[tuple[int, int], PathBucket]:
    """All nonempty paths from source with z1+z2 <= D, bucketed by bidegree."""
    if D < 1:
        raise ValueError("degree bound must be >= 1")
    projected = projected_path_count(q, source, D)
    if projected > max_paths:
        raise ResourceLimitExceeded(
            f"projected path count {projected} exceeds cap {max_paths}"
        )
    buckets: dict[tuple[int, int], PathBucket] = {}
    stack: list[int] = []

    def visit(vertex: int, z1: int, z2: int) -> None:
        if stack:
            bid = (z1, z2)
            bucket = buckets.get(bid)
            if bucket is None:
                bucket = buckets[bid] = PathBucket(source=source, bidegree=bid)
            bucket.paths_by_target.setdefault(vertex, []).append(
                Path(arrows=tuple(stack), source=source, target=vertex, bidegree=bid)
            )
        for arrow in q.arrows_from(vertex):
            dz1, dz2 = arrow.bidegree
            if z1 + z2 + dz1 + dz2 <= D:
                stack.append(arrow.id)
                visit(arrow.head, z1 + dz1, z2 + dz2)
                stack.pop()

    visit(source, 0, 0)
    return buckets


def congruence_closure(
    bucket: PathBucket, rels: list[Relation], order: str = "forward"
) -> list[frozenset[tuple[int, ...]]]:
    """Partition of the bucket's paths under one-step subpath substitution.

    `order` selects the worklist schedule ("forward" FIFO / "reverse" LIFO
    with reversed relation list); the result is order-independent and the
    determinism tests assert that.
    """
    paths = [p.arrows for p in bucket.paths]
    index = {p: i for i, p in enumerate(paths)}
    parent = list(range(len(paths)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    sides = []
    rel_list = rels if order == "forward" else list(reversed(rels))
    for rel in rel_list:
        sides.append((rel.lhs.arrows, rel.rhs.arrows))
        sides.append((rel.rhs.arrows, rel.lhs.arrows))

    work: deque[int] = deque(range(len(paths)))
    while work:
        i = work.popleft() if order == "forward" else work.pop()
        p = paths[i]
        for old, new in sides:
            L = len(old)
            for k in range(len(p) - L + 1):
                if p[k : k + L] == old:
                    p2 = p[:k] + new + p[k + L :]
                    j = index[p2]
                    ri, rj = find(i), find(j)
                    if ri != rj:
                        parent[ri] = rj
                        work.append(i)
                        work.append(j)
    classes: dict[int, set[tuple[int, ...]]] = {}
    for i, p in enumerate(paths):
        classes.setdefault(find(i), set()).add(p)
    return sorted((frozenset(c) for c in classes.values()), key=lambda c: sorted(c))


@dataclass
class GradedDimTable:
    """Class counts per (source, target, z1, z2) for all z1+z2 <= D."""

    D: int
    counts: dict[tuple[int, int, int, int], int]

    def get(self, source: int, target: int, z1: int, z2: int) -> int:
        if z1 + z2 > self.D:
            raise ValueError(f"bidegree ({z1},{z2}) beyond table bound {self.D}")
        return self.counts.get((source, target, z1, z2), 0)


class ClassEngine:
    """Congruence closure over path classes up to a total degree bound."""

    def __init__(
        self,
        q: Quiver,
        rels: list[Relation] | None = None,
        D: int = 0,
        max_nodes: int = DEFAULT_MAX_NODES,
    ) -> None:
        if D < 1:
            raise ValueError("degree bound must be >= 1")
        self.q = q
        self.rels = generate_relations(q) if rels is None else rels
        self.D = D
        self.max_nodes = max_nodes
        # node attributes
        self._parent: list[int] = []
        self._src: list[int] = []
        self._tgt: list[int] = []
        self._deg: list[tuple[int, int]] = []
        self._rep: list[tuple[int, int] | None] = []  # (arrow id, child node) or None
        self._uses: dict[int, list[tuple[int, int]]] = {}
        self._sig: dict[tuple[int, int], int] = {}
        self._pending: deque[tuple[int, int]] = deque()
        self._by_degree: list[list[int]] = [[] for _ in range(D + 1)]
        self.empty: dict[int, int] = {}
        self._arrows_into: dict[int, list] = {
            v: [x for x in q.arrows if x.head == v] for v in range(q.num_vertices)
        }
        self._rels_by_target: dict[int, list[Relation]] = {}
        for rel in self.rels:
            self._rels_by_target.setdefault(rel.target, []).append(rel)
        self._build()

    # -- union-find with signature propagation ------------------------------
    def find(self, x: int) -> int:
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def _new_node(self, src: int, tgt: int, deg: tuple[int, int], rep) -> int:
        node = len(self._parent)
        if node >= self.max_nodes:
            raise ResourceLimitExceeded(f"class-node cap {self.max_nodes} exceeded")
        self._parent.append(node)
        self._src.append(src)
        self._tgt.append(tgt)
        self._deg.append(deg)
        self._rep.append(rep)
        self._uses[node] = []
        self._by_degree[deg[0] + deg[1]].append(node)
        return node

    def _get_ext(self, arrow, child: int) -> int:
        """Node for the class of paths (arrow, then a path of class child)."""
        root = self.find(child)
        key = (arrow.id, root)
        node = self._sig.get(key)
        if node is not None:
            return node
        z1 = arrow.bidegree[0] + self._deg[root][0]
        z2 = arrow.bidegree[1] + self._deg[root][1]
        node = self._new_node(arrow.tail, self._tgt[root], (z1, z2), (arrow.id, child))
        self._sig[key] = node
        self._uses[root].append((arrow.id, node))
        return node

    def _union(self, x: int, y: int) -> None:
        self._pending.append((x, y))
        while self._pending:
            a, b = self._pending.popleft()
            ra, rb = self.find(a), self.find(b)
            if ra == rb:
                continue
            # merged classes must agree on endpoints and bidegree
            assert self._src[ra] == self._src[rb] and self._tgt[ra] == self._tgt[rb]
            assert self._deg[ra] == self._deg[rb]
            if len(self._uses[ra]) < len(self._uses[rb]):
                ra, rb = rb, ra
            self._parent[rb] = ra
            for arrow_id, child in self._uses.pop(rb):
                del self._sig[(arrow_id, rb)]
                key = (arrow_id, ra)
                existing = self._sig.get(key)
                if existing is None:
                    self._sig[key] = child
                    self._uses[ra].append((arrow_id, child))
                elif self.find(existing) != self.find(child):
                    self._pending.append((existing, child))

    def _fold(self, path: Path, child: int) -> int:
        node = child
        for arrow_id in reversed(path.arrows):
            node = self._get_ext(self.q.arrows[arrow_id], node)
        return node

    # -- construction -------------------------------------------------------
    def _build(self) -> None:
        for v in range(self.q.num_vertices):
            self.empty[v] = self._new_node(v, v, (0, 0), None)
        done: set[int] = set()
        for d in range(self.D + 1):
            layer = self._by_degree[d]
            i = 0
            while i < len(layer):  # folds may append to the current layer
                node = layer[i]
                i += 1
                root = self.find(node)
                if root in done:
                    continue
                done.add(root)
                self._process(root, d)

    def _process(self, root: int, d: int) -> None:
        src = self._src[root]
        for rel in self._rels_by_target.get(src, ()):
            dz = rel.bidegree[0] + rel.bidegree[1]
            if d + dz <= self.D:
                self._union(self._fold(rel.lhs, root), self._fold(rel.rhs, root))
        for arrow in self._arrows_into[src]:
            if d + arrow.bidegree[0] + arrow.bidegree[1] <= self.D:
                self._get_ext(arrow, root)

    # -- queries ------------------------------------------------------------
    def class_of(self, arrows: tuple[int, ...], source: int | None = None) -> int:
        """Root node of the class of the given path (degree must be <= D)."""
        if not arrows:
            if source is None:
                raise ValueError("empty path needs an explicit vertex")
            return self.find(self.empty[source])
        node = self.empty[self.q.arrows[arrows[-1]].head]
        for arrow_id in reversed(arrows):
            key = (arrow_id, self.find(node))
            if key not in self._sig:
                raise ValueError("path beyond the engine's degree bound")
            node = self._sig[key]
        return self.find(node)

    def representative(self, node: int) -> tuple[int, ...]:
        """One concrete path in the class containing the given node."""
        arrows = []
        while True:
            rep = self._rep[node]
            if rep is None:
                return tuple(arrows)
            arrows.append(rep[0])
            node = rep[1]

    def cell_roots(self) -> dict[tuple[int, int, int, int], list[int]]:
        cells: dict[tuple[int, int, int, int], set[int]] = {}
        for node in range(len(self._parent)):
            root = self.find(node)
            z1, z2 = self._deg[root]
            cells.setdefault((self._src[root], self._tgt[root], z1, z2), set()).add(root)
        return {cell: sorted(roots) for cell, roots in cells.items()}

    def dimension_table(self) -> GradedDimTable:
        counts = {cell: len(roots) for cell, roots in self.cell_roots().items()}
        return GradedDimTable(D=self.D, counts=counts)


def graded_dims(
    q: Quiver,
    rels: list[Relation] | None = None,
    D: int | None = None,
    max_nodes: int = DEFAULT_MAX_NODES,
) -> GradedDimTable:
    """Bigraded dimensions of every component e_p A e_q up to z1+z2 <= D.

    Default bound D = 2r+2 covers all invariant-ring generators plus one
    composition layer.
    """
    if D is None:
        D = 2 * q.r + 2
    engine = ClassEngine(q, rels, D, max_nodes=max_nodes)
    return engine.dimension_table()


@dataclass
class VerifyReport:
    r: int
    a: int
    D: int
    ok: bool
    cells_checked: int
    failures: list[dict] = field(default_factory=list)


def verify_endomorphism_presentation(
    r: int, a: int, D: int | None = None, max_nodes: int = DEFAULT_MAX_NODES
) -> VerifyReport:
    """Check class count == Hom-space dimension for every cell with z1+z2 <= D.

    This is the computational content of the endomorphism-algebra
    presentation: at most one path class per (source, target, bidegree)
    cell, and exactly one whenever the weight indicator allows a map.
    """
    q = build_quiver_cached(r, a)
    if D is None:
        D = 2 * r + 2
    engine = ClassEngine(q, generate_relations(q), D, max_nodes=max_nodes)
    cells = engine.cell_roots()
    failures: list[dict] = []
    checked = 0
    for p in range(q.num_vertices):
        for t in range(q.num_vertices):
            for z1 in range(D + 1):
                for z2 in range(D + 1 - z1):
                    checked += 1
                    roots = cells.get((p, t, z1, z2), [])
                    expected = hom_indicator(r, a, q.series, p, t, z1, z2)
                    if len(roots) == expected:
                        continue
                    failure = {
                        "source": p,
                        "target": t,
                        "bidegree": [z1, z2],
                        "classes": len(roots),
                        "expected": expected,
                    }
                    if len(roots) > 1:
                        failure["witnesses"] = [
                            [q.arrows[i].name for i in engine.representative(roots[0])],
                            [q.arrows[i].name for i in engine.representative(roots[1])],
                        ]
                    elif len(roots) == 1:
                        failure["witness"] = [
                            q.arrows[i].name for i in engine.representative(roots[0])
                        ]
                    failures.append(failure)
    return VerifyReport(r=r, a=a, D=D, ok=not failures, cells_checked=checked, failures=failures)


_quiver_cache: dict[tuple[int, int], Quiver] = {}


def build_quiver_cached(r: int, a: int) -> Quiver:
    key = (r, a)
    if key not in _quiver_cache:
        from .cfrac import hj_expand

        _quiver_cache[key] = build_quiver(hj_expand(r, a))
    return _quiver_cache[key]
