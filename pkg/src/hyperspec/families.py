"""Constructors for the named hypergraph families.

Every family is addressed by a :class:`FamilySpec` (a tag plus integer
parameters).  Where a family has a distinguished vertex (a centre or the
vertex that pendant edges hang from) it is labelled 0.

=============  ==========================================================
tag            meaning (parameters)
=============  ==========================================================
S_nk           k-uniform hyperstar on n vertices (n, k)
P_nk           k-uniform loose path on n vertices (n, k)
C_nk           k-uniform loose cycle on n vertices (n, k)
S_n, P_n, C_n  ordinary star, path, cycle (n)
K_n            complete graph (n)
S_m_n          hyperstar: m-1 edges of size 2, one of size n-m+1 (m, n)
Sprime2_n      hyperstar with edges of sizes 3 and n-2 (n)
Pprime_n       path P_{n-2} with a 3-edge on its last vertex (n)
D_nkc          one k-edge with c and m-1-c pendant k-edges at two vertices
H_nk           one k-edge with m-3, 1, 1 pendant k-edges at three vertices
T_nks          two k-edges sharing a vertex, s and m-2-s pendant edges
               at a degree-one vertex of each (n, k, s)
Ck_g_a         loose cycle of length g with a pendant k-edges at one
               cycle vertex (k, g, a)
F_nkg          loose cycle of length g with n/(k-1)-g pendant edges at a
               degree-one vertex of the cycle (n, k, g)
U1_n           one n-edge plus one 2-edge inside it (n)
U2_n           2-cycle made of a 3-edge and an (n-1)-edge (n)
U_ng           cycle C_g with a pendant path, n vertices (n, g)
W_n            path P_{n-4} with two pendant vertices at each end (n)
Z_n            path P_{n-2} with two pendant vertices at one end (n)
Zprime_n       path P_{n-1} with a pendant vertex on its third-last vertex
K_nk           complete k-uniform hypergraph (n, k)
K_nkp          K^{(k)}_{n-p(k-1)} with p pendant k-edges at one vertex
G_all_n        every vertex subset of size >= 2 is an edge (n)
Hp_n           G_all on n-p vertices with p pendant 2-edges at a vertex
DoubleStar     stars S_{n1} and S_{n2} with their centres joined (n1, n2)
=============  ==========================================================

Here ``m`` denotes the edge count ``(n-1)/(k-1)`` of a uniform hypertree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .errors import BadParameters, UncoveredClass
from .hypergraph import Hypergraph

G_ALL_MAX_N = 20


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "params", dict(self.params))

    def __hash__(self):
        return hash((self.tag, tuple(sorted(self.params.items()))))

    def __str__(self):
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.tag}({inner})"

    @classmethod
    def of(cls, tag: str, **params) -> FamilySpec:
        return cls(tag, params)


def _need(tag, params, *names):
    missing = [x for x in names if x not in params]
    if missing:
        raise BadParameters(tag, f"missing parameter(s) {', '.join(missing)}")
    extra = set(params) - set(names)
    if extra:
        raise BadParameters(tag, f"unexpected parameter(s) {', '.join(sorted(extra))}")
    return [int(params[x]) for x in names]


def _require(cond, tag, reason):
    if not cond:
        raise BadParameters(tag, reason)


def _uniform_edge_count(tag, n, k):
    _require(k >= 2, tag, "k must be >= 2")
    _require(n >= 1 and (n - 1) % (k - 1) == 0, tag, "(n-1) must be divisible by (k-1)")
    return (n - 1) // (k - 1)


class _Builder:
    """Accumulates edges while handing out fresh vertex labels."""

    def __init__(self, n=0):
        self.n = n
        self.edges = []

    def fresh(self, count):
        out = list(range(self.n, self.n + count))
        self.n += count
        return out

    def add(self, edge):
        self.edges.append(tuple(edge))

    def pendant(self, at, size, count=1):
        for _ in range(count):
            self.add([at] + self.fresh(size - 1))

    def path_from(self, at, length):
        prev = at
        for v in self.fresh(length):
            self.add((prev, v))
            prev = v

    def build(self):
        return Hypergraph(self.n, self.edges)


def _loose_cycle(b, g, k):
    # cycle vertices are the first vertex of each edge; v1 is the first fresh vertex
    start = b.n
    count = g * (k - 1)
    b.fresh(count)
    for i in range(g):
        b.add([start + (i * (k - 1) + j) % count for j in range(k)])
    return start


def _s_nk(n, k):
    b = _Builder(1)
    for _ in range((n - 1) // (k - 1)):
        b.pendant(0, k)
    return b.build()


def _p_nk(n, k):
    m = (n - 1) // (k - 1)
    return Hypergraph(n, [range(i * (k - 1), i * (k - 1) + k) for i in range(m)])


def _gen(tag, p):
    if tag == "S_nk":
        n, k = _need(tag, p, "n", "k")
        _uniform_edge_count(tag, n, k)
        return _s_nk(n, k)
    if tag == "S_n":
        (n,) = _need(tag, p, "n")
        _require(n >= 1, tag, "n must be >= 1")
        return _s_nk(n, 2)
    if tag == "P_nk":
        n, k = _need(tag, p, "n", "k")
        _uniform_edge_count(tag, n, k)
        return _p_nk(n, k)
    if tag == "P_n":
        (n,) = _need(tag, p, "n")
        _require(n >= 1, tag, "n must be >= 1")
        return _p_nk(n, 2)
    if tag in ("C_nk", "C_n"):
        if tag == "C_n":
            (n,) = _need(tag, p, "n")
            k = 2
        else:
            n, k = _need(tag, p, "n", "k")
        _require(k >= 2, tag, "k must be >= 2")
        _require(n % (k - 1) == 0, tag, "n must be divisible by (k-1)")
        g = n // (k - 1)
        _require(g >= (3 if k == 2 else 2), tag, "cycle needs g >= 3 edges for k=2 and g >= 2 otherwise")
        b = _Builder()
        _loose_cycle(b, g, k)
        return b.build()
    if tag == "K_n":
        (n,) = _need(tag, p, "n")
        _require(n >= 1, tag, "n must be >= 1")
        return Hypergraph(n, combinations(range(n), 2))
    if tag == "S_m_n":
        m, n = _need(tag, p, "m", "n")
        _require(1 <= m <= n - 1, tag, "need 1 <= m <= n-1")
        big = n - m + 1
        return Hypergraph(n, [tuple(range(big))] + [(0, j) for j in range(big, n)])
    if tag == "Sprime2_n":
        (n,) = _need(tag, p, "n")
        _require(n >= 5, tag, "need n >= 5")
        return Hypergraph(n, [(0, 1, 2), [0] + list(range(3, n))])
    if tag == "Pprime_n":
        (n,) = _need(tag, p, "n")
        _require(n >= 4, tag, "need n >= 4")
        edges = [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2, n - 1)]
        return Hypergraph(n, edges)
    if tag == "D_nkc":
        n, k, c = _need(tag, p, "n", "k", "c")
        m = _uniform_edge_count(tag, n, k)
        _require(m >= 3, tag, "need (n-1)/(k-1) >= 3")
        cmax = (n - k) // (2 * (k - 1))
        _require(1 <= c <= cmax, tag, f"need 1 <= c <= floor((n-k)/(2(k-1))) = {cmax}")
        b = _Builder(k)
        b.add(range(k))
        b.pendant(0, k, c)
        b.pendant(1, k, m - 1 - c)
        return b.build()
    if tag == "H_nk":
        n, k = _need(tag, p, "n", "k")
        if (n, k) == (4, 2):
            return _p_nk(4, 2)
        m = _uniform_edge_count(tag, n, k)
        _require(k >= 3, tag, "need k >= 3 (apart from the convention H_{4,2} = P_4)")
        _require(m >= 4, tag, "need (n-1)/(k-1) >= 4")
        b = _Builder(k)
        b.add(range(k))
        b.pendant(0, k, m - 3)
        b.pendant(1, k)
        b.pendant(2, k)
        return b.build()
    if tag == "T_nks":
        n, k, s = _need(tag, p, "n", "k", "s")
        m = _uniform_edge_count(tag, n, k)
        smax = (n - 1) // (2 * (k - 1)) - 1
        _require(1 <= s <= smax, tag, f"need 1 <= s <= floor((n-1)/(2(k-1)) - 1) = {smax}")
        b = _Builder(2 * k - 1)
        b.add(range(k))
        b.add([0] + list(range(k, 2 * k - 1)))
        b.pendant(1, k, s)
        b.pendant(k, k, m - 2 - s)
        return b.build()
    if tag == "Ck_g_a":
        k, g, a = _need(tag, p, "k", "g", "a")
        _require(k >= 2 and g >= 2, tag, "need k >= 2 and g >= 2")
        _require((k, g) != (2, 2), tag, "a 2-uniform cycle needs g >= 3")
        _require(a >= 0, tag, "need a >= 0")
        b = _Builder()
        v1 = _loose_cycle(b, g, k)
        b.pendant(v1, k, a)
        return b.build()
    if tag == "F_nkg":
        n, k, g = _need(tag, p, "n", "k", "g")
        _require(k >= 3, tag, "need k >= 3")
        _require(n % (k - 1) == 0 and 2 <= g <= n // (k - 1), tag, "need 2 <= g <= n/(k-1)")
        b = _Builder()
        _loose_cycle(b, g, k)
        b.pendant(1, k, n // (k - 1) - g)
        hg = b.build()
        swap = list(range(hg.n))
        swap[0], swap[1] = 1, 0
        return hg.relabel(swap)
    if tag == "U1_n":
        (n,) = _need(tag, p, "n")
        _require(n >= 3, tag, "need n >= 3")
        return Hypergraph(n, [tuple(range(n)), (0, 1)])
    if tag == "U2_n":
        (n,) = _need(tag, p, "n")
        _require(n >= 4, tag, "need n >= 4")
        return Hypergraph(n, [(0, 1, 2), (0, 1) + tuple(range(3, n))])
    if tag == "U_ng":
        n, g = _need(tag, p, "n", "g")
        _require(3 <= g <= n - 1, tag, "need 3 <= g <= n-1")
        b = _Builder(g)
        for i in range(g):
            b.add((i, (i + 1) % g))
        b.path_from(0, n - g)
        return b.build()
    if tag == "W_n":
        (n,) = _need(tag, p, "n")
        _require(n >= 5, tag, "need n >= 5")
        b = _Builder(n - 4)
        for i in range(n - 5):
            b.add((i, i + 1))
        b.pendant(0, 2, 2)
        b.pendant(n - 5, 2, 2)
        return b.build()
    if tag == "Z_n":
        (n,) = _need(tag, p, "n")
        _require(n >= 4, tag, "need n >= 4")
        b = _Builder(n - 2)
        for i in range(n - 3):
            b.add((i, i + 1))
        b.pendant(0, 2, 2)
        return b.build()
    if tag == "Zprime_n":
        (n,) = _need(tag, p, "n")
        _require(n >= 6, tag, "need n >= 6")
        edges = [(i, i + 1) for i in range(n - 2)] + [(n - 4, n - 1)]
        return Hypergraph(n, edges)
    if tag == "K_nk":
        n, k = _need(tag, p, "n", "k")
        _require(2 <= k <= n, tag, "need 2 <= k <= n")
        return Hypergraph(n, combinations(range(n), k))
    if tag == "K_nkp":
        n, k, pp = _need(tag, p, "n", "k", "p")
        _require(k >= 2 and pp >= 0, tag, "need k >= 2 and p >= 0")
        core = n - pp * (k - 1)
        _require(core == 1 or core >= k, tag, "need n - p(k-1) = 1 or >= k")
        b = _Builder(core)
        for e in combinations(range(core), k):
            b.add(e)
        b.pendant(0, k, pp)
        return b.build()
    if tag == "G_all_n":
        (n,) = _need(tag, p, "n")
        _require(1 <= n <= G_ALL_MAX_N, tag, f"need 1 <= n <= {G_ALL_MAX_N}")
        return Hypergraph(n, [e for s in range(2, n + 1) for e in combinations(range(n), s)])
    if tag == "Hp_n":
        pp, n = _need(tag, p, "p", "n")
        _require(pp >= 0 and n >= pp + 3, tag, "need p >= 0 and n >= p+3")
        _require(n - pp <= G_ALL_MAX_N, tag, f"need n - p <= {G_ALL_MAX_N}")
        core = n - pp
        b = _Builder(core)
        for s in range(2, core + 1):
            for e in combinations(range(core), s):
                b.add(e)
        b.pendant(0, 2, pp)
        return b.build()
    if tag == "DoubleStar":
        n1, n2 = _need(tag, p, "n1", "n2")
        _require(n1 >= 2 and n2 >= 2, tag, "need n1, n2 >= 2")
        b = _Builder(n1 + n2)
        b.add((0, n1))
        for i in range(1, n1):
            b.add((0, i))
        for i in range(1, n2):
            b.add((n1, n1 + i))
        return b.build()
    raise BadParameters(tag, "unknown family tag")


TAGS = (
    "S_nk", "P_nk", "C_nk", "S_n", "P_n", "C_n", "K_n", "S_m_n", "Sprime2_n", "Pprime_n",
    "D_nkc", "H_nk", "T_nks", "Ck_g_a", "F_nkg", "U1_n", "U2_n", "U_ng", "W_n", "Z_n",
    "Zprime_n", "K_nk", "K_nkp", "G_all_n", "Hp_n", "DoubleStar",
)


def generate(spec: FamilySpec | str, **params) -> Hypergraph:
    """Build the hypergraph named by ``spec``.

    ``generate("S_nk", n=7, k=3)`` and ``generate(FamilySpec.of("S_nk", n=7, k=3))``
    are equivalent.
    """
    if isinstance(spec, str):
        spec = FamilySpec(spec, params)
    elif params:
        raise TypeError("pass parameters either in the spec or as keywords, not both")
    return _gen(spec.tag, spec.params)


def parse_params(text: str) -> dict[str, int]:
    """Parse ``"n=7,k=3"`` into ``{"n": 7, "k": 3}``."""
    out = {}
    for part in filter(None, (s.strip() for s in text.split(","))):
        key, sep, value = part.partition("=")
        if not sep:
            raise ValueError(f"bad parameter {part!r}; expected key=value")
        out[key.strip()] = int(value)
    return out


# -- extremal routing -------------------------------------------------------

@dataclass(frozen=True)
class ExtremalQuery:
    """A class of hypergraphs together with a rank within it.

    ``kind`` is one of ``uniform_hypertree``, ``hypertree``,
    ``hypertree_edges``, ``hypertree_max_degree``, ``hypertree_pendant``,
    ``non_2_uniform_hypertree``, ``unicyclic``, ``uniform_unicyclic``,
    ``uniform_unicyclic_girth``, ``linear_uniform_unicyclic``,
    ``uniform_pendant`` or ``pendant``.  ``rank`` counts from 1 and
    ``largest`` selects the direction of the ordering.
    """

    kind: str
    params: Mapping[str, int]
    rank: int = 1
    largest: bool = True

    def __post_init__(self):
        object.__setattr__(self, "params", dict(self.params))


def known_extremal(query: ExtremalQuery, alpha: float = 0.0) -> FamilySpec:
    """The family that is extremal at the requested rank for the query's class.

    The answer does not depend on ``alpha`` (the argument is accepted to
    make that explicit at call sites).
    """
    if not 0.0 <= alpha < 1.0:
        from .errors import AlphaOutOfRange
        raise AlphaOutOfRange(f"alpha must lie in [0, 1), got {alpha}")
    kind, p, rank, top = query.kind, query.params, query.rank, query.largest
    F = FamilySpec.of

    def uncovered():
        return UncoveredClass(f"no extremal result for {kind} {p} rank={rank} largest={top}")

    if kind == "uniform_hypertree" and top:
        n, k = p["n"], p["k"]
        m = (n - 1) // (k - 1)
        if rank == 1:
            return F("S_nk", n=n, k=k)
        if rank == 2 and m >= 3:
            return F("D_nkc", n=n, k=k, c=1)
        if rank == 3:
            if (n, k) == (5, 2):
                return F("P_nk", n=5, k=2)
            if m == 4 and k >= 3:
                return F("H_nk", n=n, k=k)
            if m >= 5:
                return F("D_nkc", n=n, k=k, c=2)
        raise uncovered()
    if kind == "hypertree_edges" and top and rank == 1:
        return F("S_m_n", m=p["m"], n=p["n"])
    if kind == "hypertree_max_degree" and top and rank == 1:
        return F("S_m_n", m=p["delta"], n=p["n"])
    if kind == "hypertree_pendant" and top and rank == 1 and p["p"] >= 2:
        return F("S_m_n", m=p["p"], n=p["n"])
    if kind == "hypertree":
        n = p["n"]
        if top:
            if rank in (1, 2) and n >= rank + 1:
                return F("S_m_n", m=rank, n=n)
            if rank == 3 and n >= 5:
                return F("Sprime2_n", n=n)
            if rank == 3 and n == 4:
                return F("S_n", n=4)
        else:
            if rank == 1:
                return F("P_n", n=n)
            if rank == 2 and n >= 4:
                return F("Z_n", n=n)
        raise uncovered()
    if kind == "non_2_uniform_hypertree" and not top and rank == 1 and p["n"] >= 4:
        return F("Pprime_n", n=p["n"])
    if kind == "unicyclic":
        n = p["n"]
        if top and rank == 1 and n >= 3:
            return F("U1_n", n=n)
        if top and rank == 2 and n >= 4:
            return F("U2_n", n=n)
        if not top and rank == 1 and n >= 3:
            return F("C_n", n=n)
        if not top and rank == 2 and n >= 4:
            return F("U_ng", n=n, g=n - 1)
        raise uncovered()
    if kind == "uniform_unicyclic_girth" and top and rank == 1:
        n, k, g = p["n"], p["k"], p["g"]
        return F("Ck_g_a", k=k, g=g, a=n // (k - 1) - g)
    if kind == "linear_uniform_unicyclic" and top and rank == 1:
        n, k = p["n"], p["k"]
        if n // (k - 1) >= 3:
            return F("Ck_g_a", k=k, g=3, a=n // (k - 1) - 3)
        raise uncovered()
    if kind == "uniform_unicyclic" and top and rank == 1:
        n, k = p["n"], p["k"]
        if k >= 3:
            return F("Ck_g_a", k=k, g=2, a=n // (k - 1) - 2)
        if n >= 3:
            return F("Ck_g_a", k=2, g=3, a=n - 3)
        raise uncovered()
    if kind == "uniform_pendant" and top and rank == 1:
        n, k, pp = p["n"], p["k"], p["p"]
        core = n - pp * (k - 1)
        if pp == 0:
            return F("K_nk", n=n, k=k)
        if core == 1:
            return F("S_nk", n=n, k=k)
        if core == k and pp >= 2:
            return F("D_nkc", n=n, k=k, c=1)
        if core > k:
            return F("K_nkp", n=n, k=k, p=pp)
        raise uncovered()
    if kind == "pendant" and top and rank == 1:
        n, pp = p["n"], p["p"]
        if pp == n - 2:
            return F("S_m_n", m=n - 2, n=n)
        if 0 <= pp <= n - 3:
            return F("Hp_n", p=pp, n=n)
        raise uncovered()
    raise uncovered()


def uniform_edge_count(n: int, k: int) -> int:
    """``(n-1)/(k-1)`` for a k-uniform hypertree on n vertices."""
    if k < 2 or (n - 1) % (k - 1):
        raise ValueError(f"no k-uniform hypertree with n={n}, k={k}")
    return (n - 1) // (k - 1)


__all__ = [
    "FamilySpec", "ExtremalQuery", "TAGS", "generate", "known_extremal", "parse_params",
    "uniform_edge_count",
]
