"""Five-part edge decomposition of the n-Queens graph.

Cells with ``c <= r`` are blue, the rest red.  Every queen edge falls in exactly
one part:

* ``G1``  -- blue-blue along a row, column or main-parallel diagonal (a copy of the
  triangular graph of side ``n``);
* ``G2``  -- the same for red cells (triangular graph of side ``n-1``);
* ``G13`` -- anti-diagonals (``r + c`` constant), each a clique;
* ``G3H`` / ``G3V`` -- blue-red pairs sharing a row / a column.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .board import DomainError, coord_label, tri_number
from .graphs import LabeledGraph, build_queens, build_triangular

PART_NAMES = ("G1", "G2", "G13", "G3H", "G3V")


@dataclass(frozen=True)
class Decomposition:
    n: int
    blue: np.ndarray  # bool per queens vertex, row-major
    parts: dict[str, LabeledGraph]

    @property
    def colors(self) -> tuple[str, ...]:
        return tuple("blue" if b else "red" for b in self.blue)

    def blue_cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r in range(1, self.n + 1) for c in range(1, r + 1)]

    def red_cells(self) -> list[tuple[int, int]]:
        return [(r, c) for r in range(1, self.n + 1) for c in range(r + 1, self.n + 1)]

    def to_json(self) -> dict:
        cells = [(r, c) for r in range(1, self.n + 1) for c in range(1, self.n + 1)]
        return {
            "n": self.n,
            "colors": {f"{r},{c}": col for (r, c), col in zip(cells, self.colors)},
            "parts": {
                name: [[list(cells[u]), list(cells[v])] for u, v in g.edges()]
                for name, g in self.parts.items()
            },
        }


def _cell_arrays(n: int):
    r = np.repeat(np.arange(1, n + 1), n)
    c = np.tile(np.arange(1, n + 1), n)
    return r, c


def decompose(n: int) -> Decomposition:
    if n < 4:
        raise DomainError(f"the queens decomposition is defined for n >= 4, got {n}")
    r, c = _cell_arrays(n)
    blue = c <= r
    same_row = r[:, None] == r
    same_col = c[:, None] == c
    same_diag = (r - c)[:, None] == (r - c)
    same_anti = (r + c)[:, None] == (r + c)
    bb = blue[:, None] & blue
    rr = ~blue[:, None] & ~blue
    br = blue[:, None] != blue
    lines = same_row | same_col | same_diag
    masks = {
        "G1": lines & bb,
        "G2": lines & rr,
        "G13": same_anti,
        "G3H": same_row & br,
        "G3V": same_col & br,
    }
    tags = tuple(zip(r.tolist(), c.tolist()))
    colors = tuple("blue" if b else "red" for b in blue)
    parts = {}
    for name, m in masks.items():
        m = m.copy()
        np.fill_diagonal(m, False)
        parts[name] = LabeledGraph(m.astype(np.uint8), tags=tags, kind=f"queens-part-{name}", n=n, colors=colors)
    blue.setflags(write=False)
    return Decomposition(n, blue, parts)


def g1_map(n: int) -> dict[int, int]:
    """Queens vertex -> triangular vertex for blue cells: ``(r, c) -> (r, c)``."""
    return {(r - 1) * n + (c - 1): coord_label(r, c, n) - 1 for r in range(1, n + 1) for c in range(1, r + 1)}


def g2_map(n: int) -> dict[int, int]:
    """Queens vertex -> triangular vertex of side ``n-1`` for red cells: ``(r, c) -> (c-1, r)``."""
    return {
        (r - 1) * n + (c - 1): coord_label(c - 1, r, n - 1) - 1
        for r in range(1, n + 1)
        for c in range(r + 1, n + 1)
    }


def isomorphism_holds(part: LabeledGraph, mapping: dict[int, int], target: LabeledGraph) -> list[tuple]:
    """Edges that break ``mapping`` as an isomorphism of ``part`` (restricted to its domain) onto ``target``.

    An empty list means the map is a bijection onto the target's vertices that
    carries edges to edges and non-edges to non-edges, with no edges leaving the domain.
    """
    problems: list[tuple] = []
    dom = sorted(mapping)
    img = [mapping[v] for v in dom]
    if sorted(img) != list(range(target.vertex_count)):
        problems.append(("not-a-bijection", len(dom), target.vertex_count))
        return problems
    sub = part.adjacency[np.ix_(dom, dom)]
    tgt = target.adjacency[np.ix_(img, img)]
    for a, b in zip(*np.nonzero(np.triu(sub != tgt, 1))):
        problems.append(("edge-mismatch", part.tag(dom[a]), part.tag(dom[b])))
    inside = np.zeros(part.vertex_count, dtype=bool)
    inside[dom] = True
    for u, v in part.edges():
        if not (inside[u] and inside[v]):
            problems.append(("edge-outside-domain", part.tag(u), part.tag(v)))
    return problems


def _components(g: LabeledGraph) -> list[list[int]]:
    seen = np.zeros(g.vertex_count, dtype=bool)
    nbrs = g.neighbor_lists()
    out = []
    for s in range(g.vertex_count):
        if seen[s] or not nbrs[s]:
            continue
        stack, comp = [s], []
        seen[s] = True
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in nbrs[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


@dataclass
class DecompositionReport:
    n: int
    checks: dict[str, bool] = field(default_factory=dict)
    failures: dict[str, list] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def record(self, name: str, problems: list) -> None:
        self.checks[name] = not problems
        if problems:
            self.failures[name] = problems

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "ok": self.ok,
            "checks": dict(self.checks),
            "failures": {k: [list(map(_plain, p)) if isinstance(p, tuple) else p for p in v] for k, v in self.failures.items()},
        }


def _plain(x):
    if isinstance(x, tuple):
        return list(x)
    if isinstance(x, np.integer):
        return int(x)
    return x


def verify_decomposition(d: Decomposition) -> DecompositionReport:
    n = d.n
    rep = DecompositionReport(n)
    q = build_queens(n)
    if set(d.parts) != set(PART_NAMES):
        rep.record("parts-present", [("parts", sorted(d.parts))])
        return rep
    mats = {k: g.adjacency.astype(np.int64) for k, g in d.parts.items()}
    total = sum(mats.values())
    diff = np.argwhere(total != q.adjacency)
    rep.record(
        "identity",
        [(q.tag(a), q.tag(b), int(total[a, b]), int(q.adjacency[a, b])) for a, b in diff],
    )
    over = np.argwhere(np.triu(total > 1, 1))
    rep.record("disjoint", [(q.tag(a), q.tag(b), int(total[a, b])) for a, b in over])

    rep.record("G1~T(n)", isomorphism_holds(d.parts["G1"], g1_map(n), build_triangular(n)))
    rep.record("G2~T(n-1)", isomorphism_holds(d.parts["G2"], g2_map(n), build_triangular(n - 1)))

    # anti-diagonal cliques of sizes 1..n..1
    g13 = d.parts["G13"]
    problems = []
    for s in range(2, 2 * n + 1):
        members = [(r - 1) * n + (s - r - 1) for r in range(max(1, s - n), min(n, s - 1) + 1)]
        want = min(s - 1, 2 * n + 1 - s)
        block = g13.adjacency[np.ix_(members, members)]
        if len(members) != want or block.sum() != want * (want - 1):
            problems.append(("anti-diagonal", s, len(members)))
    census = sorted(len(c) for c in _components(g13))
    expected = sorted([k for k in range(2, n + 1)] + [k for k in range(2, n)])
    if census != expected or g13.edge_count != sum(k * (k - 1) // 2 for k in expected):
        problems.append(("clique-sizes", tuple(census)))
    rep.record("G13-census", problems)

    for name, axis in (("G3H", 0), ("G3V", 1)):
        g = d.parts[name]
        problems = []
        for line in range(1, n + 1):
            cells = [(line, c) for c in range(1, n + 1)] if axis == 0 else [(r, line) for r in range(1, n + 1)]
            idx = [(r - 1) * n + (c - 1) for r, c in cells]
            b = [v for v in idx if d.blue[v]]
            rd = [v for v in idx if not d.blue[v]]
            sub = g.adjacency[np.ix_(b, rd)]
            if not sub.all() or g.adjacency[np.ix_(b, b)].any() or g.adjacency[np.ix_(rd, rd)].any():
                problems.append(("line", line, len(b), len(rd)))
            outside = np.setdiff1d(np.flatnonzero(g.adjacency[idx].any(axis=0)), idx)
            if outside.size:
                problems.append(("edge-leaves-line", line))
        sizes = sorted(
            (sum(1 for v in comp if d.blue[v]), sum(1 for v in comp if not d.blue[v])) for comp in _components(g)
        )
        if sizes != sorted((i, n - i) for i in range(1, n)):
            problems.append(("bipartite-components", tuple(sizes)))
        shapes = sorted(grp["shape"] for grp in bipartite_groups(d, name))
        if shapes != sorted((i, n - i) for i in range(1, n + 1)):
            problems.append(("bipartite-groups", tuple(shapes)))
        rep.record(f"{name}-census", problems)

    deg = q.degrees()
    parts_deg = sum(g.degrees() for g in d.parts.values())
    rep.record("degrees", [q.tag(v) for v in np.flatnonzero(deg != parts_deg)])
    return rep


def restriction_consistent(n: int) -> bool:
    """``decompose(n+1)`` restricted to the top-left ``n x n`` board equals ``decompose(n)``."""
    big, small = decompose(n + 1), decompose(n)
    keep = [(r - 1) * (n + 1) + (c - 1) for r in range(1, n + 1) for c in range(1, n + 1)]
    return all(
        np.array_equal(big.parts[k].adjacency[np.ix_(keep, keep)], small.parts[k].adjacency) for k in PART_NAMES
    ) and np.array_equal(big.blue[keep], small.blue)


def bipartite_groups(d: Decomposition, name: str) -> list[dict]:
    """Per-line ``K_{blue, red}`` groups of ``G3H`` (rows) or ``G3V`` (columns), including edgeless ones."""
    n = d.n
    out = []
    for line in range(1, n + 1):
        cells = [(line, c) for c in range(1, n + 1)] if name == "G3H" else [(r, line) for r in range(1, n + 1)]
        blue = [cell for cell in cells if cell[1] <= cell[0]]
        red = [cell for cell in cells if cell[1] > cell[0]]
        out.append({"line": line, "blue": blue, "red": red, "shape": (len(blue), len(red))})
    return out


def vertex_counts(n: int) -> tuple[int, int]:
    return tri_number(n), tri_number(n - 1)
