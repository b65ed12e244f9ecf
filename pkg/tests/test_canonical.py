import networkx as nx
import numpy as np
import pytest
from hypothesis import given, strategies as st

from hyperspec import Hypergraph
from hyperspec.canonical import automorphism_orbits, canonical_code, canonical_form, canonical_labelling
from hyperspec.errors import ScaleExceeded
from hyperspec.families import generate

from conftest import hypergraphs


def incidence_graph(hg):
    G = nx.Graph()
    G.add_nodes_from((("v", v) for v in range(hg.n)), side=0)
    G.add_nodes_from((("e", j) for j in range(hg.m)), side=1)
    for j, e in enumerate(hg.edges):
        for v in e:
            G.add_edge(("v", v), ("e", j))
    return G


def nx_isomorphic(a, b):
    if a.n != b.n or a.m != b.m:
        return False
    return nx.is_isomorphic(incidence_graph(a), incidence_graph(b),
                            node_match=lambda x, y: x["side"] == y["side"])


def test_code_examples():
    P = generate("P_nk", n=5, k=3)
    assert canonical_code(generate("S_nk", n=5, k=3)) == canonical_code(P)
    assert canonical_code(generate("Z_n", n=6)) != canonical_code(generate("P_n", n=6))
    rng = np.random.default_rng(3)
    for _ in range(20):
        assert canonical_code(P.relabel(list(rng.permutation(5)))) == canonical_code(P)


def test_scale_cap():
    with pytest.raises(ScaleExceeded):
        canonical_code(generate("P_n", n=17))


@pytest.mark.parametrize("spec", [
    ("D_nkc", dict(n=9, k=3, c=1)), ("H_nk", dict(n=9, k=3)), ("W_n", dict(n=8)),
    ("Ck_g_a", dict(k=3, g=3, a=2)), ("U1_n", dict(n=6)), ("K_nkp", dict(n=8, k=3, p=2)),
    ("Zprime_n", dict(n=9)), ("Hp_n", dict(p=2, n=6)),
], ids=lambda s: s[0])
def test_invariant_under_many_relabelings(spec):
    hg = generate(spec[0], **spec[1])
    code = canonical_code(hg)
    rng = np.random.default_rng(0)
    for _ in range(1000):
        assert canonical_code(hg.relabel([int(v) for v in rng.permutation(hg.n)])) == code


@given(hypergraphs(max_n=6), hypergraphs(max_n=6))
def test_code_equality_matches_networkx(a, b):
    assert (canonical_code(a) == canonical_code(b)) == nx_isomorphic(a, b)


@given(hypergraphs(max_n=6), st.randoms(use_true_random=False))
def test_relabel_gives_isomorphic_copy_with_same_code(hg, rnd):
    perm = list(range(hg.n))
    rnd.shuffle(perm)
    h2 = hg.relabel(perm)
    assert nx_isomorphic(hg, h2)
    assert canonical_code(hg) == canonical_code(h2)


@given(hypergraphs(max_n=6))
def test_canonical_form_and_labelling(hg):
    form = Hypergraph(hg.n, canonical_form(hg))
    assert canonical_code(form) == canonical_code(hg)
    lab = canonical_labelling(hg)
    assert sorted(lab) == list(range(hg.n))
    assert hg.relabel(lab) == form


@given(hypergraphs(max_n=6))
def test_orbits_are_automorphism_orbits(hg):
    orbits = automorphism_orbits(hg)
    assert sorted(v for o in orbits for v in o) == list(range(hg.n))
    # brute-force orbits from networkx automorphisms of the incidence graph
    G = incidence_graph(hg)
    gm = nx.algorithms.isomorphism.GraphMatcher(G, G, node_match=lambda x, y: x["side"] == y["side"])
    truth = {v: {v} for v in range(hg.n)}
    for iso in gm.isomorphisms_iter():
        for v in range(hg.n):
            truth[v].add(iso[("v", v)][1])
    expected = sorted({tuple(sorted(s)) for s in truth.values()})
    assert sorted(tuple(sorted(o)) for o in orbits) == expected
