"""Canonical labelling of small hypergraphs.

Colour refinement runs on the vertex/edge incidence structure.  Remaining
ties are broken by individualising vertices one at a time; the canonical
form is the lexicographically least relabelled edge list over the search
tree.  Automorphisms discovered along the way (two leaves with equal
certificates) prune the tree, which keeps highly symmetric inputs such as
stars and complete hypergraphs cheap.
"""

from __future__ import annotations

import struct

from .errors import ScaleExceeded

MAX_VERTICES = 16


def _rank(signatures):
    order = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


class _Search:
    def __init__(self, hg):
        self.n = hg.n
        self.edges = hg.edges
        self.inc = hg.incidence
        self.first = None  # (cert, pos, path)
        self.best = None
        self.generators = []

    def refine(self, vcol):
        edges, inc = self.edges, self.inc
        nv = len(set(vcol))
        ne = 1
        ecol = [0] * len(edges)
        while True:
            ecol = _rank([(ecol[j], tuple(sorted(vcol[v] for v in e))) for j, e in enumerate(edges)])
            vcol = _rank([(vcol[v], tuple(sorted(ecol[j] for j in inc[v]))) for v in range(self.n)])
            nv2, ne2 = len(set(vcol)), len(set(ecol))
            if nv2 == nv and ne2 == ne:
                return vcol
            nv, ne = nv2, ne2

    def certificate(self, pos):
        return tuple(sorted(tuple(sorted(pos[v] for v in e)) for e in self.edges))

    def run(self):
        self.descend(self.refine([0] * self.n), [])

    def descend(self, vcol, path):
        n = self.n
        if len(set(vcol)) == n:
            return self.leaf(vcol, path)
        # target cell: the first non-singleton colour class
        counts = {}
        for c in vcol:
            counts[c] = counts.get(c, 0) + 1
        target = min(c for c, k in counts.items() if k > 1)
        cell = [v for v in range(n) if vcol[v] == target]
        depth = len(path)
        explored = []
        for w in cell:
            if explored:
                root = self._orbit_finder(path)
                if any(root(w) == root(x) for x in explored):
                    continue
            child = [2 * c + (0 if v == w else 1) if c == target else 2 * c + 1 for v, c in enumerate(vcol)]
            res = self.descend(self.refine(child), path + [w])
            explored.append(w)
            if res is not None and res < depth:
                return res
        return None

    def leaf(self, pos, path):
        cert = self.certificate(pos)
        if self.first is None:
            self.first = self.best = (cert, pos, path)
            return None
        for ref in (self.first, self.best):
            if cert == ref[0]:
                self._record(pos, ref[1])
                return _divergence(path, ref[2])
        if cert < self.best[0]:
            self.best = (cert, pos, path)
        return None

    def _record(self, pos, ref_pos):
        inv = [0] * self.n
        for v, p in enumerate(ref_pos):
            inv[p] = v
        g = tuple(inv[pos[v]] for v in range(self.n))
        if any(g[v] != v for v in range(self.n)):
            self.generators.append(g)

    def _orbit_finder(self, fixed):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            if all(g[v] == v for v in fixed):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return find


def _divergence(p, q):
    for i, (a, b) in enumerate(zip(p, q)):
        if a != b:
            return i
    return min(len(p), len(q))


def _search(hg):
    if hg.n > MAX_VERTICES:
        raise ScaleExceeded(f"canonical labelling is limited to n <= {MAX_VERTICES}, got {hg.n}")
    s = _Search(hg)
    if hg.n:
        s.run()
    return s


def canonical_form(hg):
    """The canonical edge list (as a tuple of sorted tuples) of ``hg``."""
    s = _search(hg)
    return s.best[0] if s.best else ()


def canonical_code(hg) -> bytes:
    """Byte string identifying the isomorphism class of ``hg``."""
    form = canonical_form(hg)
    ints = [hg.n, len(form)]
    for e in form:
        ints.append(len(e))
        ints.extend(e)
    return struct.pack(f">{len(ints)}I", *ints)


def canonical_labelling(hg) -> list[int]:
    """A vertex map ``v -> position`` sending ``hg`` to its canonical form."""
    s = _search(hg)
    return list(s.best[1]) if s.best else []


def automorphism_orbits(hg) -> list[tuple[int, ...]]:
    """Vertex orbits of the automorphism group found by the labelling search.

    The generators come from leaf coincidences during the search; the
    orbits returned are never coarser than the true orbits.
    """
    s = _search(hg)
    find = s._orbit_finder([])
    groups = {}
    for v in range(hg.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(g) for g in groups.values())
