"""Local rewrites of a hypergraph with a known effect on the spectral radius.

Each operation checks its preconditions and raises
:class:`PreconditionViolated` (or a subclass) rather than letting two edges
collapse into one.  New vertices always take the next free labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .errors import NotTwoUniform, NoSuchEdge, PreconditionViolated, VertexOutOfRange
from .hypergraph import Hypergraph

KINDS = (
    "MoveEdges", "MoveVertex", "DetachVertex", "ExchangeVertices", "SubdivideEdge",
    "AttachPendantVertex", "AttachPath", "AttachPendantEdges",
)


def _edge(G, e, what="edge"):
    e = tuple(sorted(set(int(v) for v in e)))
    if e not in G.edge_set:
        raise NoSuchEdge(f"{what} {list(e)} is not an edge of the hypergraph")
    return e


def _vertex(G, u):
    u = int(u)
    if not 0 <= u < G.n:
        raise VertexOutOfRange(f"vertex {u} not in 0..{G.n - 1}")
    return u


def _fresh(G, new_edge, what):
    if new_edge in G.edge_set:
        raise PreconditionViolated(f"{what} {list(new_edge)} is already an edge")


def _replace(G, remove, add, n=None):
    drop = set(remove)
    return Hypergraph(G.n if n is None else n, [e for e in G.edges if e not in drop] + list(add))


def move_edges(G: Hypergraph, v: int, u: int, which: Iterable[Sequence[int]]) -> Hypergraph:
    """Move the edges ``which`` (all containing ``v``, none containing ``u``) from v to u."""
    v, u = _vertex(G, v), _vertex(G, u)
    olds = [_edge(G, e) for e in which]
    if len(set(olds)) != len(olds):
        raise PreconditionViolated("the same edge is listed twice")
    news = []
    for e in olds:
        if v not in e:
            raise PreconditionViolated(f"edge {list(e)} does not contain v={v}")
        if u in e:
            raise PreconditionViolated(f"edge {list(e)} already contains u={u}")
        ne = tuple(sorted((set(e) - {v}) | {u}))
        _fresh(G, ne, f"moved edge from {list(e)}:")
        news.append(ne)
    if len(set(news)) != len(news):
        raise PreconditionViolated("two moved edges coincide after the move")
    return _replace(G, olds, news)


def move_vertex(G: Hypergraph, u: int, e2: Sequence[int], e1: Sequence[int]) -> Hypergraph:
    """Move vertex ``u`` out of ``e2`` and into ``e1``."""
    u = _vertex(G, u)
    e1, e2 = _edge(G, e1, "e1"), _edge(G, e2, "e2")
    if u in e1:
        raise PreconditionViolated(f"u={u} already lies in e1 {list(e1)}")
    if u not in e2:
        raise PreconditionViolated(f"u={u} does not lie in e2 {list(e2)}")
    if len(e2) < 3:
        raise PreconditionViolated(f"e2 {list(e2)} must have at least 3 vertices")
    g1 = tuple(sorted(e1 + (u,)))
    g2 = tuple(v for v in e2 if v != u)
    _fresh(G, g1, "e1 + u")
    _fresh(G, g2, "e2 - u")
    return _replace(G, [e1, e2], [g1, g2])


def detach_vertex(G: Hypergraph, e: Sequence[int], w2: int, w1: int) -> Hypergraph:
    """Remove ``w2`` from ``e`` and add the edge ``{w1, w2}``."""
    e = _edge(G, e)
    w1, w2 = _vertex(G, w1), _vertex(G, w2)
    if len(e) < 3:
        raise PreconditionViolated(f"edge {list(e)} must have at least 3 vertices")
    if w1 == w2 or w1 not in e or w2 not in e:
        raise PreconditionViolated(f"w1={w1} and w2={w2} must be distinct vertices of {list(e)}")
    shrunk = tuple(v for v in e if v != w2)
    pair = tuple(sorted((w1, w2)))
    _fresh(G, shrunk, "e - w2")
    _fresh(G, pair, "{w1, w2}")
    return _replace(G, [e], [shrunk, pair])


def exchange_vertices(G: Hypergraph, e1: Sequence[int], u: int, e2: Sequence[int], v: int) -> Hypergraph:
    """Swap ``u`` (in e1 only) with ``v`` (in e2 only)."""
    e1, e2 = _edge(G, e1, "e1"), _edge(G, e2, "e2")
    u, v = _vertex(G, u), _vertex(G, v)
    if u not in e1 or u in e2:
        raise PreconditionViolated(f"u={u} must lie in e1 {list(e1)} and not in e2 {list(e2)}")
    if v not in e2 or v in e1:
        raise PreconditionViolated(f"v={v} must lie in e2 {list(e2)} and not in e1 {list(e1)}")
    g1 = tuple(sorted((set(e1) - {u}) | {v}))
    g2 = tuple(sorted((set(e2) - {v}) | {u}))
    _fresh(G, g1, "new e1")
    _fresh(G, g2, "new e2")
    return _replace(G, [e1, e2], [g1, g2])


def _require_graph(G):
    if any(len(e) != 2 for e in G.edges):
        raise NotTwoUniform("operation needs an ordinary graph (every edge of size 2)")


def subdivide_edge(G: Hypergraph, u: int, v: int) -> Hypergraph:
    """Replace the graph edge ``{u, v}`` by the path ``u w v`` through a new vertex ``w = n``."""
    _require_graph(G)
    e = tuple(sorted((int(u), int(v))))
    if e not in G.edge_set:
        raise NoSuchEdge(f"{list(e)} is not an edge")
    w = G.n
    return _replace(G, [e], [(e[0], w), (e[1], w)], n=G.n + 1)


def attach_pendant_vertex(G: Hypergraph, u: int) -> Hypergraph:
    u = _vertex(G, u)
    return Hypergraph(G.n + 1, G.edges + ((u, G.n),))


def attach_path(G: Hypergraph, u: int, k: int) -> Hypergraph:
    """``G(u; k)``: join ``u`` to an end of a new path on ``k`` vertices."""
    u = _vertex(G, u)
    if k < 0:
        raise ValueError("path length must be >= 0")
    edges = list(G.edges)
    prev = u
    for w in range(G.n, G.n + k):
        edges.append((prev, w))
        prev = w
    return Hypergraph(G.n + k, edges)


def attach_pendant_edges(G: Hypergraph, u: int, count: int, size: int) -> Hypergraph:
    u = _vertex(G, u)
    if size < 2 or count < 0:
        raise ValueError("need size >= 2 and count >= 0")
    edges = list(G.edges)
    n = G.n
    for _ in range(count):
        edges.append((u,) + tuple(range(n, n + size - 1)))
        n += size - 1
    return Hypergraph(n, edges)


@dataclass(frozen=True)
class InternalPath:
    kind: str  # "i" (closed, returns to v0) or "ii" (open, two ends of degree >= 3)
    vertices: tuple[int, ...]

    @property
    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [tuple(sorted(vs[i:i + 2])) for i in range(len(vs) - 1)]


def internal_paths(G: Hypergraph) -> list[InternalPath]:
    """All maximal internal paths of a connected graph.

    A type "i" path ``v0 v1 .. vk v0`` is a cycle hanging at a single vertex
    of degree >= 3; a type "ii" path joins two vertices of degree >= 3.
    Interior vertices have degree 2 in both cases.
    """
    _require_graph(G)
    if not G.is_connected():
        raise PreconditionViolated("internal paths are defined here for connected graphs")
    deg = G.degrees
    adj = [sorted(G.neighbors(v)) for v in range(G.n)]
    found = set()
    for s in range(G.n):
        if deg[s] < 3:
            continue
        for first in adj[s]:
            walk = [s, first]
            while deg[walk[-1]] == 2:
                a, b = adj[walk[-1]]
                walk.append(b if a == walk[-2] else a)
            end = walk[-1]
            if deg[end] < 3:
                continue
            kind = "i" if end == s else "ii"
            rev = tuple(reversed(walk))
            found.add((kind, min(tuple(walk), rev)))
    return [InternalPath(k, vs) for k, vs in sorted(found, key=lambda t: (t[0], len(t[1]), t[1]))]


# -- descriptor interface ---------------------------------------------------

@dataclass(frozen=True)
class GraftInstance:
    kind: str
    source: Hypergraph
    arguments: dict[str, Any] = field(default_factory=dict)
    result: Hypergraph | None = None

    def to_dict(self):
        return {
            "kind": self.kind,
            "arguments": self.arguments,
            "source": self.source.to_dict(),
            "result": None if self.result is None else self.result.to_dict(),
        }


_SIGNATURES = {
    "MoveEdges": (move_edges, ("v", "u", "edges")),
    "MoveVertex": (move_vertex, ("u", "e2", "e1")),
    "DetachVertex": (detach_vertex, ("e", "w2", "w1")),
    "ExchangeVertices": (exchange_vertices, ("e1", "u", "e2", "v")),
    "SubdivideEdge": (subdivide_edge, ("u", "v")),
    "AttachPendantVertex": (attach_pendant_vertex, ("u",)),
    "AttachPath": (attach_path, ("u", "k")),
    "AttachPendantEdges": (attach_pendant_edges, ("u", "count", "size")),
}


def apply(G: Hypergraph, descriptor: dict) -> GraftInstance:
    """Apply an operation descriptor such as ``{"kind": "DetachVertex", "e": [0,1,2], "w2": 2, "w1": 0}``."""
    kind = descriptor.get("kind")
    if kind not in _SIGNATURES:
        raise ValueError(f"unknown operation kind {kind!r}; expected one of {', '.join(KINDS)}")
    fn, names = _SIGNATURES[kind]
    missing = [x for x in names if x not in descriptor]
    if missing:
        raise ValueError(f"{kind} descriptor is missing {', '.join(missing)}")
    extra = set(descriptor) - set(names) - {"kind"}
    if extra:
        raise ValueError(f"{kind} descriptor has unknown field(s) {', '.join(sorted(extra))}")
    args = {x: descriptor[x] for x in names}
    result = fn(G, *(args[x] for x in names))
    return GraftInstance(kind, G, args, result)
