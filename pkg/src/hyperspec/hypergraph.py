"""Hypergraph data model and structural queries.

Vertices are the integers ``0 .. n-1``.  Edges are stored as sorted tuples
and the edge sequence itself is kept in lexicographic order, so two
``Hypergraph`` values built from the same edge set compare (and hash) equal.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    BudgetExceeded,
    Disconnected,
    DuplicateEdge,
    EdgeTooSmall,
    VertexOutOfRange,
)

Edge = tuple[int, ...]

CYCLE_SEARCH_BUDGET = 10**6


@dataclass(frozen=True)
class Hypergraph:
    """A hypergraph on ``n`` vertices with a set of distinct edges of size >= 2.

    Construction validates and canonicalizes the edge list; an invalid
    edge raises :class:`EdgeTooSmall`, :class:`VertexOutOfRange` or
    :class:`DuplicateEdge`.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        n = int(self.n)
        if n < 0:
            raise VertexOutOfRange(f"vertex count must be >= 0, got {n}")
        seen = set()
        for raw in self.edges:
            e = tuple(sorted({int(v) for v in raw}))
            if len(e) < 2:
                raise EdgeTooSmall(f"edge {list(raw)} has fewer than 2 vertices")
            if e[0] < 0 or e[-1] >= n:
                raise VertexOutOfRange(f"edge {list(e)} not inside 0..{n - 1}")
            if e in seen:
                raise DuplicateEdge(f"edge {list(e)} appears twice")
            seen.add(e)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={[list(e) for e in self.edges]})"

    # -- basic counts -------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """For each vertex, the indices of the edges containing it."""
        inc = [[] for _ in range(self.n)]
        for j, e in enumerate(self.edges):
            for v in e:
                inc[v].append(j)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    @cached_property
    def row_sums(self) -> tuple[int, ...]:
        sums = [0] * self.n
        for e in self.edges:
            for v in e:
                sums[v] += len(e) - 1
        return tuple(sums)

    @property
    def excess(self) -> int:
        """Sum of ``|e| - 1`` over all edges."""
        return sum(len(e) - 1 for e in self.edges)

    def _check_vertex(self, u):
        if not 0 <= u < self.n:
            raise VertexOutOfRange(f"vertex {u} not in 0..{self.n - 1}")

    def degree(self, u: int) -> int:
        """Number of edges containing ``u``."""
        self._check_vertex(u)
        return self.degrees[u]

    def row_sum(self, u: int) -> int:
        """Row sum of the adjacency matrix at ``u``: sum of ``|e|-1`` over edges at ``u``."""
        self._check_vertex(u)
        return self.row_sums[u]

    def neighbors(self, u: int) -> set[int]:
        self._check_vertex(u)
        out = set()
        for j in self.incidence[u]:
            out.update(self.edges[j])
        out.discard(u)
        return out

    # -- connectivity -------------------------------------------------------

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Vertex sets of the connected components, ordered by smallest vertex."""
        comp = [-1] * self.n
        out = []
        for s in range(self.n):
            if comp[s] >= 0:
                continue
            comp[s] = len(out)
            members = [s]
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for j in self.incidence[x]:
                    for y in self.edges[j]:
                        if comp[y] < 0:
                            comp[y] = len(out)
                            members.append(y)
                            queue.append(y)
            out.append(tuple(sorted(members)))
        return tuple(out)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def is_hypertree(self) -> bool:
        # A connected hypergraph is acyclic iff its vertex-edge incidence graph is a tree.
        return self.n >= 1 and self.is_connected() and self.excess == self.n - 1

    def is_unicyclic(self) -> bool:
        return self.n >= 1 and self.is_connected() and self.excess == self.n

    # -- cycles -------------------------------------------------------------

    def find_cycles(self, max_len: int | None = None) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """All cycles ``v0 e1 v1 ... ep v0`` with ``2 <= p <= max_len``.

        Each cycle is returned once (rotations and reversals identified) as a
        pair ``(vertices, edge_indices)`` where the cycle reads
        ``vertices[0] edges[0] vertices[1] ... edges[-1] vertices[0]``; the
        representative starts at its smallest vertex.  Results are sorted by
        length and then lexicographically.
        """
        if max_len is None:
            max_len = self.n + self.m
        found = set()
        budget = [0]
        inc = self.incidence
        edges = self.edges

        def extend(start, verts, used):
            budget[0] += 1
            if budget[0] > CYCLE_SEARCH_BUDGET:
                raise BudgetExceeded("cycle search exceeded its partial-path budget")
            last = verts[-1]
            for j in inc[last]:
                if j in used:
                    continue
                e = edges[j]
                if len(verts) >= 2 and start in e and len(used) + 1 <= max_len:
                    found.add(_canonical_cycle(verts, used + (j,)))
                if len(used) + 1 >= max_len:
                    continue
                for w in e:
                    if w > start and w not in verts:
                        extend(start, verts + (w,), used + (j,))

        for s in range(self.n):
            extend(s, (s,), ())
        return sorted(found, key=lambda c: (len(c[1]), c))

    @cached_property
    def _girth(self):
        # Shortest cycle of the bipartite incidence graph, halved.
        n, m = self.n, self.m
        adj = [[] for _ in range(n + m)]
        for j, e in enumerate(self.edges):
            for v in e:
                adj[v].append(n + j)
                adj[n + j].append(v)
        best = None
        for s in range(n + m):
            dist = {s: 0}
            parent = {s: -1}
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        queue.append(y)
                    elif parent[x] != y:
                        length = dist[x] + dist[y] + 1
                        if best is None or length < best:
                            best = length
        return None if best is None else best // 2

    def girth(self) -> int | None:
        """Length of a shortest cycle, or ``None`` when there is no cycle."""
        return self._girth

    # -- other structure ----------------------------------------------------

    def uniformity(self) -> int | None:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def is_linear(self) -> bool:
        return all(len(set(a) & set(b)) <= 1 for a, b in combinations(self.edges, 2))

    def pendant_edges(self) -> list[tuple[Edge, int]]:
        """Edges with one vertex of degree >= 2 and all others of degree 1."""
        deg = self.degrees
        out = []
        for e in self.edges:
            high = [v for v in e if deg[v] >= 2]
            if len(high) == 1:
                out.append((e, high[0]))
        return out

    def diameter(self) -> int:
        """Largest edge-count distance between two vertices."""
        if not self.is_connected():
            raise Disconnected("diameter needs a connected hypergraph")
        best = 0
        for s in range(self.n):
            dist = self._distances_from(s)
            best = max(best, max(dist))
        return best

    def _distances_from(self, s):
        dist = [-1] * self.n
        dist[s] = 0
        queue = deque([s])
        seen_edges = set()
        while queue:
            x = queue.popleft()
            for j in self.incidence[x]:
                if j in seen_edges:
                    continue
                seen_edges.add(j)
                for y in self.edges[j]:
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        queue.append(y)
        return dist

    # -- derived hypergraphs ------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> Hypergraph:
        """Image under the vertex map ``v -> perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Hypergraph(self.n, [[perm[v] for v in e] for e in self.edges])

    def with_edges(self, add: Iterable[Iterable[int]] = (), remove: Iterable[Iterable[int]] = (),
                   n: int | None = None) -> Hypergraph:
        drop = {tuple(sorted(e)) for e in remove}
        kept = [e for e in self.edges if e not in drop]
        return Hypergraph(self.n if n is None else n, kept + [tuple(e) for e in add])

    def induced(self, vertices: Iterable[int]) -> Hypergraph:
        """Sub-hypergraph on ``vertices`` (relabelled in increasing order)."""
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        return Hypergraph(len(vs), [[index[v] for v in e] for e in self.edges if all(v in index for v in e)])

    def canonical_code(self) -> bytes:
        from .canonical import canonical_code
        return canonical_code(self)

    # -- interchange --------------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Hypergraph:
        return cls(int(data["n"]), [list(e) for e in data["edges"]])

    @classmethod
    def from_json(cls, text: str) -> Hypergraph:
        return cls.from_dict(json.loads(text))


def validate(n: int, raw_edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Build a canonical :class:`Hypergraph` or raise the matching validation error."""
    return Hypergraph(n, [tuple(e) for e in raw_edges])


def _canonical_cycle(verts, edge_ids):
    # verts[i] -- edge_ids[i] -- verts[i+1 mod p]; start is verts[0] (the minimum vertex).
    p = len(verts)
    fwd = (tuple(verts), tuple(edge_ids))
    rv = (verts[0],) + tuple(reversed(verts[1:]))
    re = tuple(edge_ids[(p - 1 - i) % p] for i in range(p))
    return min(fwd, (rv, re))
