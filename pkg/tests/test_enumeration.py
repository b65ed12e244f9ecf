from itertools import product

import networkx as nx
import pytest

from hyperspec.canonical import canonical_code
from hyperspec.enumeration import EnumQuery, brute_force, count, enumerate_class, matches
from hyperspec.errors import ScaleExceeded
from hyperspec.families import generate
from hyperspec.hypergraph import Hypergraph

Q = EnumQuery.of

# Trees(n) class counts.  n <= 7 is recomputed below from Pruefer sequences;
# n = 8 came from the same procedure run once offline (about a minute) and
# n = 9 from networkx's independent tree generator; both are frozen here.
TREE_COUNTS = {4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47}


def pruefer_tree_classes(n):
    """Decode every Pruefer sequence of length n-2 and count classes with networkx."""
    reps = []
    for seq in product(range(n), repeat=n - 2):
        T = nx.from_prufer_sequence(list(seq))
        if not any(nx.is_isomorphic(T, R) for R in reps):
            reps.append(T)
    return len(reps)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_tree_counts_against_pruefer_oracle(n):
    assert pruefer_tree_classes(n) == TREE_COUNTS[n]


@pytest.mark.parametrize("n", sorted(TREE_COUNTS))
def test_tree_counts(n):
    assert count(Q("Trees", n=n)) == TREE_COUNTS[n]
    assert sum(1 for _ in nx.nonisomorphic_trees(n)) == TREE_COUNTS[n]


def test_uniform_hypertree_examples():
    assert count(Q("UniformHypertrees", k=3, m=2)) == 1
    got = {canonical_code(h) for h in enumerate_class(Q("UniformHypertrees", k=3, m=3))}
    assert got == {canonical_code(generate("S_nk", n=7, k=3)), canonical_code(generate("P_nk", n=7, k=3))}


def test_hypertrees_on_four_vertices():
    got = {canonical_code(h) for h in enumerate_class(Q("Hypertrees", n=4))}
    want = {canonical_code(generate(t, **p)) for t, p in [
        ("S_m_n", dict(m=1, n=4)), ("S_m_n", dict(m=2, n=4)), ("P_n", dict(n=4)), ("S_n", dict(n=4))]}
    assert got == want


def test_unicyclic_on_four_vertices():
    got = {canonical_code(h) for h in brute_force(Q("Unicyclic", n=4))}
    for t, p in [("C_n", dict(n=4)), ("U_ng", dict(n=4, g=3)), ("U1_n", dict(n=4)), ("U2_n", dict(n=4))]:
        assert canonical_code(generate(t, **p)) in got
    assert got == {canonical_code(h) for h in enumerate_class(Q("Unicyclic", n=4))}


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_only_cycle_at_full_girth(n):
    (hg,) = enumerate_class(Q("UniformUnicyclic", k=2, m=n, g=n))
    assert canonical_code(hg) == canonical_code(generate("C_n", n=n))


def _small_queries():
    qs = []
    for n in range(1, 6):
        qs += [Q("Trees", n=n), Q("Hypertrees", n=n), Q("Unicyclic", n=n), Q("ConnectedGraphs", n=n)]
        for m in range(1, n):
            qs.append(Q("Hypertrees", n=n, m=m))
        for g in range(2, n + 1):
            qs.append(Q("Unicyclic", n=n, g=g))
        for p in range(0, n):
            qs.append(Q("PendantConstrained", base=Q("Hypertrees", n=n), p=p))
            qs.append(Q("PendantConstrained", base=Q("Unicyclic", n=n), p=p))
    for k in (2, 3, 4):
        for m in range(1, 5):
            if 1 + m * (k - 1) <= 5:
                qs.append(Q("UniformHypertrees", k=k, m=m))
            if m * (k - 1) <= 5 and (k, m) not in ((2, 1), (2, 2)):
                qs.append(Q("UniformUnicyclic", k=k, m=m))
    return qs


@pytest.mark.parametrize("q", _small_queries(), ids=str)
def test_growth_matches_edge_set_filter(q):
    grown = enumerate_class(q)
    codes = [canonical_code(h) for h in grown]
    assert len(set(codes)) == len(codes)
    assert all(matches(q, h) for h in grown)
    assert set(codes) == {canonical_code(h) for h in brute_force(q)}


@pytest.mark.parametrize("q", [Q("Hypertrees", n=7), Q("Unicyclic", n=6), Q("UniformUnicyclic", k=3, m=4),
                               Q("ConnectedGraphs", n=6), Q("UniformHypertrees", k=4, m=3)], ids=str)
def test_members_valid_and_distinct(q):
    out = enumerate_class(q)
    codes = [canonical_code(h) for h in out]
    assert codes == sorted(codes)
    assert len(set(codes)) == len(codes)
    assert all(matches(q, h) for h in out)


def test_known_class_sizes():
    assert [count(Q("Hypertrees", n=n)) for n in range(1, 8)] == [1, 1, 2, 4, 9, 22, 59]
    assert [count(Q("ConnectedGraphs", n=n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_jobs_do_not_change_output():
    q = Q("Hypertrees", n=7)
    assert enumerate_class(q, jobs=1) == enumerate_class(q, jobs=3)


def test_caps():
    for q in (Q("Trees", n=11), Q("ConnectedGraphs", n=11), Q("Hypertrees", n=9), Q("Unicyclic", n=8),
              Q("UniformHypertrees", k=3, m=5), Q("UniformUnicyclic", k=3, m=5)):
        with pytest.raises(ScaleExceeded):
            enumerate_class(q)
    with pytest.raises(ScaleExceeded):
        brute_force(Q("Hypertrees", n=6))


def test_prune_hook():
    # rho_0 <= 2 passes to connected induced subgraphs
    from hyperspec.spectral import rho
    keep = lambda h: rho(h, 0.0) <= 2 + 1e-9
    pruned = enumerate_class(Q("ConnectedGraphs", n=6), prune=keep)
    full = [h for h in enumerate_class(Q("ConnectedGraphs", n=6)) if keep(h)]
    assert {canonical_code(h) for h in pruned if keep(h)} == {canonical_code(h) for h in full}


def test_matches_rejects_wrong_class():
    assert not matches(Q("Trees", n=4), generate("C_n", n=4))
    assert not matches(Q("Hypertrees", n=5), Hypergraph(5, [(0, 1), (2, 3, 4)]))
    assert matches(Q("Unicyclic", n=5, g=2), generate("U2_n", n=5))
