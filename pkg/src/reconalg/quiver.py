"""The quiver underlying the reconstruction algebra of type A.

For labels [alpha_1..alpha_n] with n >= 2 the quiver has vertices 0..n
arranged in a cycle, one clockwise arrow t -> t-1 per vertex (with 0 -> n
closing the cycle), one anticlockwise arrow t -> t+1 per vertex (with
n -> 0 closing the cycle), and alpha_t - 2 extra arrows t -> 0 for each
vertex t >= 1.  Extra arrows are numbered k_1..k_gamma with
gamma = sum(alpha_t - 2), increasing with the tail vertex; the
conventional aliases are k_0 = (clockwise 1 -> 0) and k_{gamma+1} =
(anticlockwise n -> 0).

For n = 1 the quiver has two vertices, two anticlockwise-style arrows
a1 (x-like), a2 (y-like) from 0 to 1 and alpha_1 arrows c1, c2,
k_1..k_{alpha_1-2} from 1 to 0.

Every arrow carries a bidegree: the (x,y)-exponent pair of the monomial
it maps to under the labeling of the endomorphism diagram of the special
modules.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cfrac import IJSeries, extra_arrow_tails, hj_value, ij_series, validate_labels


@dataclass(frozen=True)
class Arrow:
    id: int
    name: str
    kind: str  # "clockwise" | "anticlockwise" | "extra"
    tail: int
    head: int
    bidegree: tuple[int, int]
    k_index: int | None = None  # extra-arrow chain index (aliases included)


@dataclass(frozen=True)
class Quiver:
    labels: tuple[int, ...]
    n: int
    r: int
    a: int
    series: IJSeries
    arrows: tuple[Arrow, ...]
    l: tuple[int, ...]  # tail vertex of k_s for s = 0..gamma+1
    gamma: int

    @property
    def num_vertices(self) -> int:
        return self.n + 1

    def u(self, i: int) -> int:
        """Largest s with l_s = i."""
        return max(s for s, tail in enumerate(self.l) if tail == i)

    def v(self, i: int) -> int:
        """Smallest s with l_s = i."""
        return min(s for s, tail in enumerate(self.l) if tail == i)

    def V(self, i: int) -> int:
        """Largest s with l_s < i (0 for i = 1)."""
        if i == 1:
            return 0
        return max(s for s, tail in enumerate(self.l) if tail < i)

    def arrow_by_name(self, name: str) -> Arrow:
        for arrow in self.arrows:
            if arrow.name == name:
                return arrow
        raise KeyError(name)

    def clockwise_into(self, head: int) -> Arrow:
        """The clockwise arrow ending at the given vertex (n >= 2 only)."""
        (arrow,) = [x for x in self.arrows if x.kind == "clockwise" and x.head == head]
        return arrow

    def anticlockwise_into(self, head: int) -> Arrow:
        (arrow,) = [
            x for x in self.arrows if x.kind == "anticlockwise" and x.head == head
        ]
        return arrow

    def k_arrow(self, s: int) -> Arrow:
        """The arrow in the k-chain with index s (aliases for s=0, gamma+1)."""
        if self.n == 1:
            raise ValueError("k-chain aliases are a >=2-vertex convention")
        if s == 0:
            return self.arrow_by_name(f"c{1},{0}")
        if s == self.gamma + 1:
            return self.arrow_by_name(f"a{self.n},{0}")
        (arrow,) = [x for x in self.arrows if x.kind == "extra" and x.k_index == s]
        return arrow

    def arrows_from(self, tail: int) -> list[Arrow]:
        return [x for x in self.arrows if x.tail == tail]


def _bidegrees_n1(r: int, alpha: int) -> list[tuple[str, str, int, int, tuple[int, int], int | None]]:
    """Arrow table (name, kind, tail, head, bidegree, k_index) for n = 1."""
    rows: list[tuple[str, str, int, int, tuple[int, int], int | None]] = [
        ("c1", "clockwise", 1, 0, (r - 1, 0), None),
        ("c2", "clockwise", 1, 0, (r - 2, 1), None),
        ("a1", "anticlockwise", 0, 1, (1, 0), None),
        ("a2", "anticlockwise", 0, 1, (0, 1), None),
    ]
    for t in range(1, alpha - 1):
        rows.append((f"k{t}", "extra", 1, 0, (r - 2 - t, t + 1), t))
    return rows


def build_quiver(labels: list[int] | tuple[int, ...]) -> Quiver:
    validate_labels(list(labels))
    labels = tuple(labels)
    n = len(labels)
    r, a = hj_value(list(labels))
    series = ij_series(r, a)
    l = extra_arrow_tails(labels)
    gamma = sum(alpha - 2 for alpha in labels)

    rows: list[tuple[str, str, int, int, tuple[int, int], int | None]]
    if n == 1:
        rows = _bidegrees_n1(r, labels[0])
    else:
        i, j = series.i, series.j
        rows = []
        # clockwise arrows, ascending by tail: 0 -> n, then t -> t-1
        rows.append(("c0,%d" % n, "clockwise", 0, n, (1, 0), None))
        for t in range(1, n + 1):
            kidx = 0 if t == 1 else None
            rows.append((f"c{t},{t - 1}", "clockwise", t, t - 1, (i[t - 1] - i[t], 0), kidx))
        # anticlockwise arrows, ascending by tail
        for t in range(0, n):
            rows.append((f"a{t},{t + 1}", "anticlockwise", t, t + 1, (0, j[t + 1] - j[t]), None))
        rows.append((f"a{n},0", "anticlockwise", n, 0, (0, r - j[n]), gamma + 1))
        # extra arrows k_1..k_gamma
        for s in range(1, gamma + 1):
            ls = l[s]
            m = s - (0 if ls == 1 else max(t for t, tail in enumerate(l) if tail < ls))
            bidegree = (i[ls - 1] - (m + 1) * i[ls], m * j[ls] - j[ls - 1])
            rows.append((f"k{s}", "extra", ls, 0, bidegree, s))

    arrows = tuple(
        Arrow(id=idx, name=name, kind=kind, tail=tail, head=head, bidegree=bid, k_index=kidx)
        for idx, (name, kind, tail, head, bid, kidx) in enumerate(rows)
    )
    for arrow in arrows:
        z1, z2 = arrow.bidegree
        assert z1 >= 0 and z2 >= 0 and z1 + z2 >= 1, arrow
        # arrow weight matches the difference of special-module indices
        assert (z1 + a * z2 - (series.i[arrow.head] - series.i[arrow.tail])) % r == 0, arrow
    q = Quiver(labels=labels, n=n, r=r, a=a, series=series, arrows=arrows, l=l, gamma=gamma)
    expected = 4 + (labels[0] - 2) if n == 1 else 2 * (n + 1) + gamma
    assert len(arrows) == expected
    if n >= 2:
        assert q.v(1) == 0 and q.u(n) == gamma + 1
    return q


def reverse_iso(labels: list[int] | tuple[int, ...]) -> dict[int, int]:
    """Arrow bijection from the quiver of [alphas] to that of reversed [alphas].

    Vertices flip by 0 -> 0, t -> n+1-t; clockwise and anticlockwise arrows
    swap roles, and the k-chain reverses: index s maps to gamma+1-s.  Each
    arrow's bidegree (z1, z2) maps to (z2, z1).
    """
    q = build_quiver(labels)
    qr = build_quiver(list(reversed(labels)))
    n, gamma = q.n, q.gamma
    mapping: dict[int, int] = {}
    if n == 1:
        # order the arrows 1 -> 0 by y-exponent: c1, c2, k_1..k_{alpha-2};
        # position p maps to position (alpha-1) - p; a1 and a2 swap
        alpha = labels[0]
        chain = ["c1", "c2"] + [f"k{t}" for t in range(1, alpha - 1)]
        for p, name in enumerate(chain):
            mapping[q.arrow_by_name(name).id] = qr.arrow_by_name(chain[alpha - 1 - p]).id
        mapping[q.arrow_by_name("a1").id] = qr.arrow_by_name("a2").id
        mapping[q.arrow_by_name("a2").id] = qr.arrow_by_name("a1").id
    else:
        flip = lambda t: 0 if t == 0 else n + 1 - t
        for arrow in q.arrows:
            t_, h_ = flip(arrow.tail), flip(arrow.head)
            if arrow.kind == "clockwise":
                image = qr.anticlockwise_into(h_)
                assert image.tail == t_
            elif arrow.kind == "anticlockwise":
                image = qr.clockwise_into(h_)
                assert image.tail == t_
            else:
                image = qr.k_arrow(gamma + 1 - arrow.k_index)
            mapping[arrow.id] = image.id
    for arrow in q.arrows:
        image = qr.arrows[mapping[arrow.id]]
        z1, z2 = arrow.bidegree
        assert image.bidegree == (z2, z1), (arrow, image)
    assert sorted(mapping.values()) == list(range(len(qr.arrows)))
    return mapping


def quiver_to_json_dict(q: Quiver) -> dict:
    return {
        "labels": list(q.labels),
        "r": q.r,
        "a": q.a,
        "n": q.n,
        "gamma": q.gamma,
        "l_table": list(q.l),
        "vertices": list(range(q.num_vertices)),
        "arrows": [
            {
                "id": x.id,
                "name": x.name,
                "kind": x.kind,
                "tail": x.tail,
                "head": x.head,
                "bidegree": list(x.bidegree),
                "k_index": x.k_index,
            }
            for x in q.arrows
        ],
    }


def quiver_to_dot(q: Quiver) -> str:
    """DOT digraph: vertex 0 labeled with a star, vertex t with -alpha_t."""
    lines = ["digraph quiver {"]
    lines.append('  0 [label="*"];')
    for t in range(1, q.num_vertices):
        lines.append(f'  {t} [label="{-q.labels[t - 1]}"];')
    for x in q.arrows:
        z1, z2 = x.bidegree
        lines.append(
            f'  {x.tail} -> {x.head} [label="{x.name} ({z1},{z2})", kind="{x.kind}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
