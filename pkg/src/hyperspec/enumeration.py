"""Isomorph-free generation of small hypertrees, unicyclic hypergraphs and graphs.

Hypertrees are grown one edge at a time, each new edge meeting the current
hypergraph in exactly one vertex.  Unicyclic hypergraphs start from a cycle
core and are grown the same way.  Connected graphs are grown one vertex at a
time (every connected graph has a vertex whose removal keeps it connected).
Isomorphic copies are merged by canonical code at every level, and only one
attachment vertex per automorphism orbit is tried.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterator, Mapping

from .canonical import automorphism_orbits, canonical_code
from .errors import ScaleExceeded
from .hypergraph import Hypergraph

TREES_MAX_N = 10
GRAPHS_MAX_N = 10
UNIFORM_TREE_MAX_KM = 13
HYPERTREES_MAX_N = 8
UNICYCLIC_MAX_N = 7
UNIFORM_UNICYCLIC_MAX_KM = 13
BRUTE_FORCE_MAX_N = 5

KINDS = (
    "UniformHypertrees", "Hypertrees", "Trees", "UniformUnicyclic", "Unicyclic",
    "ConnectedGraphs", "PendantConstrained",
)


@dataclass(frozen=True)
class EnumQuery:
    """A class of hypergraphs to enumerate.

    ``kind`` and its parameters:

    * ``UniformHypertrees``: k, m
    * ``Hypertrees``: n, optional m (edge count)
    * ``Trees``: n
    * ``UniformUnicyclic``: k, m, optional g (girth)
    * ``Unicyclic``: n, optional g
    * ``ConnectedGraphs``: n
    * ``PendantConstrained``: p, with ``base`` another query; keeps members
      of the base class with exactly p pendant edges
    """

    kind: str
    params: Mapping[str, int] = field(default_factory=dict)
    base: EnumQuery | None = None

    def __post_init__(self):
        object.__setattr__(self, "params", dict(self.params))
        if self.kind not in KINDS:
            raise ValueError(f"unknown class {self.kind!r}")

    def __hash__(self):
        return hash((self.kind, tuple(sorted(self.params.items())), self.base))

    @classmethod
    def of(cls, kind: str, base: EnumQuery | None = None, **params) -> EnumQuery:
        return cls(kind, params, base)

    def __str__(self):
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        if self.base is not None:
            inner = f"{self.base},{inner}"
        return f"{self.kind}({inner})"

    @property
    def n(self) -> int:
        """Vertex count of every member."""
        p = self.params
        if self.kind == "UniformHypertrees":
            return 1 + p["m"] * (p["k"] - 1)
        if self.kind == "UniformUnicyclic":
            return p["m"] * (p["k"] - 1)
        if self.kind == "PendantConstrained":
            return self.base.n
        return p["n"]


def check_caps(q: EnumQuery) -> None:
    p = q.params
    kind = q.kind
    if kind == "Trees" and p["n"] > TREES_MAX_N:
        raise ScaleExceeded(f"Trees is limited to n <= {TREES_MAX_N}")
    if kind == "ConnectedGraphs" and p["n"] > GRAPHS_MAX_N:
        raise ScaleExceeded(f"ConnectedGraphs is limited to n <= {GRAPHS_MAX_N}")
    if kind == "UniformHypertrees" and p["k"] * p["m"] > UNIFORM_TREE_MAX_KM:
        raise ScaleExceeded(f"UniformHypertrees is limited to k*m <= {UNIFORM_TREE_MAX_KM}")
    if kind == "Hypertrees" and p["n"] > HYPERTREES_MAX_N:
        raise ScaleExceeded(f"Hypertrees is limited to n <= {HYPERTREES_MAX_N}")
    if kind == "Unicyclic" and p["n"] > UNICYCLIC_MAX_N:
        raise ScaleExceeded(f"Unicyclic is limited to n <= {UNICYCLIC_MAX_N}")
    if kind == "UniformUnicyclic" and p["k"] * p["m"] > UNIFORM_UNICYCLIC_MAX_KM:
        raise ScaleExceeded(f"UniformUnicyclic is limited to k*m <= {UNIFORM_UNICYCLIC_MAX_KM}")
    if kind == "PendantConstrained":
        if q.base is None or q.base.kind == "PendantConstrained":
            raise ValueError("PendantConstrained needs a base class")
        check_caps(q.base)


def matches(q: EnumQuery, hg: Hypergraph) -> bool:
    """Class membership predicate (independent of how the class is generated)."""
    p = q.params
    kind = q.kind
    if kind == "PendantConstrained":
        return matches(q.base, hg) and len(hg.pendant_edges()) == p["p"]
    if hg.n != q.n:
        return False
    if kind in ("UniformHypertrees", "UniformUnicyclic"):
        if hg.m != p["m"] or hg.uniformity() != p["k"]:
            return False
    if kind in ("Trees", "ConnectedGraphs") and any(len(e) != 2 for e in hg.edges):
        return False
    if kind in ("UniformHypertrees", "Hypertrees", "Trees"):
        if not hg.is_hypertree():
            return False
        return kind != "Hypertrees" or "m" not in p or hg.m == p["m"]
    if kind in ("UniformUnicyclic", "Unicyclic"):
        return hg.is_unicyclic() and ("g" not in p or hg.girth() == p["g"])
    return hg.is_connected()


# -- growth -----------------------------------------------------------------

def _grow_edge(item):
    hg, sizes = item
    out = []
    for orbit in automorphism_orbits(hg):
        v = orbit[0]
        for s in sizes:
            child = Hypergraph(hg.n + s - 1, hg.edges + ((v,) + tuple(range(hg.n, hg.n + s - 1)),))
            out.append((canonical_code(child), child))
    return out


def _grow_vertex(item):
    hg, _ = item
    out = []
    n = hg.n
    for r in range(1, n + 1):
        for nbrs in combinations(range(n), r):
            child = Hypergraph(n + 1, hg.edges + tuple((v, n) for v in nbrs))
            out.append((canonical_code(child), child))
    return out


def _expand(states, step, sizes_for, jobs, keep):
    items = [(hg, sizes_for(hg)) for hg in states]
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(step, items, chunksize=max(1, len(items) // (4 * jobs))))
    else:
        results = [step(it) for it in items]
    merged = {}
    for batch in results:
        for code, child in batch:
            if code not in merged and keep(child):
                merged[code] = child
    return sorted(merged.items())


def _cycle_cores(sizes, g, limit):
    """Cycle cores of length g with edge sizes drawn from ``sizes`` and at most ``limit`` vertices."""
    out = []
    for ss in combinations_with_replacement(sizes, g) if g == 2 else _size_words(sizes, g):
        if sum(ss) - g > limit:
            continue
        if g == 2 and ss == (2, 2):
            continue
        nxt = g
        edges = []
        for i, s in enumerate(ss):
            cyc = (0, 1) if g == 2 else (i, (i + 1) % g)
            edges.append(cyc + tuple(range(nxt, nxt + s - 2)))
            nxt += s - 2
        out.append(Hypergraph(nxt, edges))
    return out


def _size_words(sizes, g):
    # every size sequence; isomorphic cores are merged by code afterwards
    if g == 0:
        yield ()
        return
    for head in sizes:
        for rest in _size_words(sizes, g - 1):
            yield (head,) + rest


def _grow_levels(by_n, sizes, target, jobs, keep):
    # by_n maps vertex count -> {code: hypergraph}; levels are grown in increasing order
    for c in range(1, target):
        if c not in by_n:
            continue
        level = by_n.pop(c)
        states = [level[code] for code in sorted(level)]
        allowed = tuple(s for s in sizes if c + s - 1 <= target)
        for code, child in _expand(states, _grow_edge, lambda hg, a=allowed: a, jobs, keep):
            by_n.setdefault(child.n, {})[code] = child


def _enumerate_core(q, jobs, prune):
    p = q.params
    kind = q.kind
    keep = prune or (lambda hg: True)

    if kind == "ConnectedGraphs":
        n = p["n"]
        level = [Hypergraph(1, ())] if keep(Hypergraph(1, ())) else []
        for _ in range(n - 1):
            level = [hg for _, hg in _expand(level, _grow_vertex, lambda hg: (), jobs, keep)]
        return level if n >= 1 else []

    if kind in ("Trees", "UniformHypertrees", "Hypertrees"):
        if kind == "Trees":
            target, sizes = p["n"], (2,)
        elif kind == "UniformHypertrees":
            target, sizes = q.n, (p["k"],)
        else:
            target, sizes = p["n"], tuple(range(2, p["n"] + 1))
        if target < 1:
            return []
        by_n = {1: {b"": Hypergraph(1, ())}}
        _grow_levels(by_n, sizes, target, jobs, keep)
        final = by_n.get(target, {})
        out = [final[c] for c in sorted(final)]
        if kind == "Hypertrees" and "m" in p:
            out = [hg for hg in out if hg.m == p["m"]]
        return out

    if kind in ("Unicyclic", "UniformUnicyclic"):
        if kind == "Unicyclic":
            target = p["n"]
            sizes = tuple(range(2, target + 1))
            girths = range(2, target + 1)
        else:
            k, m = p["k"], p["m"]
            target = q.n
            sizes = (k,)
            girths = range(3 if k == 2 else 2, m + 1)
        if "g" in p:
            girths = [g for g in girths if g == p["g"]]
        by_n = {}
        for g in girths:
            for core in _cycle_cores(sizes, g, target):
                if keep(core):
                    by_n.setdefault(core.n, {})[canonical_code(core)] = core
        _grow_levels(by_n, sizes, target, jobs, keep)
        final = by_n.get(target, {})
        return [final[c] for c in sorted(final)]

    if kind == "PendantConstrained":
        return [hg for hg in _enumerate_core(q.base, jobs, prune) if len(hg.pendant_edges()) == p["p"]]

    raise ValueError(f"unknown class {kind!r}")


def enumerate_class(q: EnumQuery, jobs: int = 1,
                    prune: Callable[[Hypergraph], bool] | None = None) -> list[Hypergraph]:
    """One representative per isomorphism class, sorted by canonical code.

    ``prune`` may drop candidates during growth; it must be a property
    inherited by the smaller members the growth passes through (for
    connected graphs: by connected induced subgraphs), otherwise the result
    is incomplete.  Output does not depend on ``jobs``.
    """
    check_caps(q)
    out = _enumerate_core(q, jobs, prune)
    return sorted(out, key=canonical_code)


def count(q: EnumQuery, jobs: int = 1) -> int:
    """Number of isomorphism classes in ``q``."""
    return len(enumerate_class(q, jobs))


def iter_class(q: EnumQuery, jobs: int = 1) -> Iterator[Hypergraph]:
    yield from enumerate_class(q, jobs)


# -- brute force oracle -----------------------------------------------------

def brute_force(q: EnumQuery) -> list[Hypergraph]:
    """Enumerate ``q`` by filtering edge sets of the complete hypergraph.

    Independent of the growth code: every edge set with total weight
    ``sum(|e|-1) <= n`` (or every graph, for ConnectedGraphs) is tested
    with :func:`matches` and duplicates are merged by canonical code.
    """
    n = q.n
    if n > BRUTE_FORCE_MAX_N:
        raise ScaleExceeded(f"brute-force filtering is limited to n <= {BRUTE_FORCE_MAX_N}")
    base = q.base if q.kind == "PendantConstrained" else q
    graph_only = base.kind in ("Trees", "ConnectedGraphs") or (
        base.kind in ("UniformHypertrees", "UniformUnicyclic") and base.params["k"] == 2)
    if graph_only:
        cands = list(combinations(range(n), 2))
    else:
        cands = [e for s in range(2, n + 1) for e in combinations(range(n), s)]
    budget = None if base.kind == "ConnectedGraphs" else n
    found = {}

    def rec(i, chosen, weight):
        if i == len(cands):
            hg = Hypergraph(n, chosen)
            if matches(q, hg):
                found.setdefault(canonical_code(hg), hg)
            return
        rec(i + 1, chosen, weight)
        w = len(cands[i]) - 1
        if budget is None or weight + w <= budget:
            rec(i + 1, chosen + [cands[i]], weight + w)

    rec(0, [], 0)
    return [found[c] for c in sorted(found)]
