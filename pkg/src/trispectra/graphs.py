"""Dense labelled graphs: triangular graphs, n-Queens graphs, cliques, K_{a,b}."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterator, Sequence

import numpy as np

from .board import DomainError, Line, cells, coord_label, line_cells, tri_number


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    """Symmetric 0/1 adjacency with optional per-vertex tags.

    ``kind`` and ``n`` record how the graph was built (``"triangular"``,
    ``"queens"``, ...) so downstream code can reject foreign input.
    """

    adjacency: np.ndarray
    tags: tuple[Hashable, ...] = ()
    kind: str = "generic"
    n: int | None = None
    colors: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        a = np.array(self.adjacency, dtype=np.uint8, copy=True)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DomainError("adjacency must be square")
        if not np.array_equal(a, a.T):
            raise DomainError("adjacency must be symmetric")
        if a.size and np.any(np.diag(a)):
            raise DomainError("adjacency must have a zero diagonal")
        if np.any(a > 1):
            raise DomainError("adjacency must be 0/1")
        a.setflags(write=False)
        object.__setattr__(self, "adjacency", a)
        if self.tags and len(self.tags) != a.shape[0]:
            raise DomainError("one tag per vertex required")
        if self.colors and len(self.colors) != a.shape[0]:
            raise DomainError("one color per vertex required")

    @property
    def vertex_count(self) -> int:
        return self.adjacency.shape[0]

    @property
    def edge_count(self) -> int:
        return int(self.adjacency.sum()) // 2

    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1).astype(np.int64)

    def edges(self) -> Iterator[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adjacency, 1))
        for u, v in zip(us.tolist(), vs.tolist()):
            yield u, v

    def neighbors(self, v: int) -> list[int]:
        return np.flatnonzero(self.adjacency[v]).tolist()

    def neighbor_lists(self) -> list[list[int]]:
        return [np.flatnonzero(row).tolist() for row in self.adjacency]

    def tag(self, v: int) -> Hashable:
        return self.tags[v] if self.tags else v

    def int_matrix(self, shift: int = 0) -> list[list[int]]:
        """``A - shift*I`` as Python integer rows."""
        rows = self.adjacency.astype(np.int64).tolist()
        for k, row in enumerate(rows):
            row[k] -= shift
        return rows

    def same_as(self, other: "LabeledGraph") -> bool:
        return np.array_equal(self.adjacency, other.adjacency)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.vertex_count):
            label = _tag_text(self.tag(v))
            attrs = [f'label="{label}"']
            if self.colors:
                attrs += ["style=filled", f'fillcolor="{self.colors[v]}"']
            lines.append(f"  v{v} [{', '.join(attrs)}];")
        for u, v in self.edges():
            lines.append(f"  v{u} -- v{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_matrix_market(self) -> str:
        """Symmetric pattern Matrix Market, lower triangle, 1-based."""
        entries = sorted((max(u, v) + 1, min(u, v) + 1) for u, v in self.edges())
        n = self.vertex_count
        out = ["%%MatrixMarket matrix coordinate pattern symmetric", f"{n} {n} {len(entries)}"]
        out += [f"{r} {c}" for r, c in entries]
        return "\n".join(out) + "\n"


def _tag_text(tag: Hashable) -> str:
    if isinstance(tag, tuple):
        return "(" + ",".join(str(t) for t in tag) + ")"
    return str(tag)


def from_edges(count: int, edges, **kw) -> LabeledGraph:
    a = np.zeros((count, count), dtype=np.uint8)
    for u, v in edges:
        if u == v:
            raise DomainError(f"self loop at {u}")
        a[u, v] = a[v, u] = 1
    return LabeledGraph(a, **kw)


def build_triangular(n: int) -> LabeledGraph:
    """Vertices are board cells in label order; same row, column or diagonal => adjacent."""
    if n < 1:
        raise DomainError(f"triangular graph needs n >= 1, got {n}")
    cs = list(cells(n))
    i = np.array([c[0] for c in cs])
    j = np.array([c[1] for c in cs])
    d = i - j
    a = (i[:, None] == i) | (j[:, None] == j) | (d[:, None] == d)
    np.fill_diagonal(a, False)
    return LabeledGraph(a.astype(np.uint8), tags=tuple(cs), kind="triangular", n=n)


def build_queens(n: int) -> LabeledGraph:
    """Board cells ``(r, c)`` in row-major order; queen moves are edges."""
    if n < 1:
        raise DomainError(f"queens graph needs n >= 1, got {n}")
    cs = [(r, c) for r in range(1, n + 1) for c in range(1, n + 1)]
    r = np.array([x[0] for x in cs])
    c = np.array([x[1] for x in cs])
    a = (
        (r[:, None] == r)
        | (c[:, None] == c)
        | ((r - c)[:, None] == (r - c))
        | ((r + c)[:, None] == (r + c))
    )
    np.fill_diagonal(a, False)
    return LabeledGraph(a.astype(np.uint8), tags=tuple(cs), kind="queens", n=n)


def queens_index(r: int, c: int, n: int) -> int:
    """0-based vertex index of board cell ``(r, c)``."""
    return (r - 1) * n + (c - 1)


def build_clique(k: int) -> LabeledGraph:
    if k < 1:
        raise DomainError(f"clique needs k >= 1, got {k}")
    a = np.ones((k, k), dtype=np.uint8)
    np.fill_diagonal(a, 0)
    return LabeledGraph(a, kind="clique", n=k)


def build_complete_bipartite(a: int, b: int) -> LabeledGraph:
    """``K_{a,b}``; parts are vertices ``0..a-1`` and ``a..a+b-1``.  ``K_{a,0}`` is edgeless."""
    if a < 0 or b < 0 or a + b < 1:
        raise DomainError(f"complete bipartite graph needs a, b >= 0 and a + b >= 1, got ({a}, {b})")
    m = np.zeros((a + b, a + b), dtype=np.uint8)
    m[:a, a:] = 1
    m[a:, :a] = 1
    colors = ("blue",) * a + ("red",) * b
    return LabeledGraph(m, kind="bipartite", colors=colors)


@dataclass(frozen=True)
class EdgeCliquePartition:
    """Edge partition whose parts each induce a clique.

    ``parts`` are 0-based vertex index tuples; ``names`` describe each part.
    """

    vertex_count: int
    parts: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] = ()

    @property
    def clique_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for part in self.parts:
            for v in part:
                deg[v] += 1
        return tuple(deg)

    @property
    def max_clique_degree(self) -> int:
        return max(self.clique_degrees, default=0)

    def covers_exactly(self, g: LabeledGraph) -> bool:
        """Every edge of ``g`` lies in exactly one part, and parts use only edges of ``g``."""
        count = np.zeros_like(g.adjacency, dtype=np.int64)
        for part in self.parts:
            idx = np.array(part, dtype=np.int64)
            if len(idx) < 2:
                continue
            block = np.ones((len(idx), len(idx)), dtype=np.int64)
            np.fill_diagonal(block, 0)
            count[np.ix_(idx, idx)] += block
        return bool(np.array_equal(count, g.adjacency.astype(np.int64)))


def ecp_lines(g: LabeledGraph) -> EdgeCliquePartition:
    """Rows, columns and diagonals of a triangular graph as cliques (singletons kept)."""
    if g.kind != "triangular" or g.n is None or not g.same_as(build_triangular(g.n)):
        raise DomainError("ecp_lines needs a graph produced by build_triangular")
    n = g.n
    parts: list[tuple[int, ...]] = []
    names: list[str] = []
    for kind, indices in ((Line.ROW, range(1, n + 1)), (Line.COL, range(1, n + 1)), (Line.DIAG, range(n))):
        for idx in indices:
            parts.append(tuple(coord_label(i, j, n) - 1 for i, j in line_cells(kind, n, idx)))
            names.append(f"{kind.value}{idx}")
    return EdgeCliquePartition(tri_number(n), tuple(parts), tuple(names))


def induced(g: LabeledGraph, vertices: Sequence[int]) -> np.ndarray:
    idx = np.asarray(vertices, dtype=np.int64)
    return g.adjacency[np.ix_(idx, idx)]
