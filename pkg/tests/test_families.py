import math

import pytest

from hyperspec.canonical import canonical_code
from hyperspec.errors import BadParameters, UncoveredClass, AlphaOutOfRange
from hyperspec.families import TAGS, ExtremalQuery, FamilySpec, generate, known_extremal, parse_params
from hyperspec.spectral import rho


def code(tag, **p):
    return canonical_code(generate(tag, **p))


def test_generate_examples():
    assert generate("P_nk", n=5, k=3).edges == ((0, 1, 2), (2, 3, 4))
    S1 = generate("S_m_n", m=1, n=6)
    assert S1.edges == ((0, 1, 2, 3, 4, 5),)
    assert generate("U2_n", n=5).edges == ((0, 1, 2), (0, 1, 3, 4))
    with pytest.raises(BadParameters) as err:
        generate("D_nkc", n=9, k=3, c=2)
    assert err.value.tag == "D_nkc"


@pytest.mark.parametrize("tag,params", [
    ("S_nk", dict(n=8, k=3)), ("P_nk", dict(n=6, k=4)), ("C_nk", dict(n=7, k=3)),
    ("C_nk", dict(n=2, k=2)), ("S_m_n", dict(m=0, n=5)), ("Sprime2_n", dict(n=4)),
    ("Pprime_n", dict(n=3)), ("H_nk", dict(n=7, k=3)), ("H_nk", dict(n=5, k=2)),
    ("T_nks", dict(n=9, k=3, s=2)), ("Ck_g_a", dict(k=2, g=2, a=1)), ("Ck_g_a", dict(k=3, g=1, a=0)),
    ("F_nkg", dict(n=8, k=3, g=5)), ("U1_n", dict(n=2)), ("U2_n", dict(n=3)), ("U_ng", dict(n=5, g=5)),
    ("W_n", dict(n=4)), ("Z_n", dict(n=3)), ("Zprime_n", dict(n=5)), ("K_nk", dict(n=3, k=4)),
    ("K_nkp", dict(n=6, k=3, p=2)), ("G_all_n", dict(n=21)), ("Hp_n", dict(p=3, n=5)),
    ("DoubleStar", dict(n1=1, n2=3)), ("S_nk", dict(n=7)), ("nonsense", dict(n=4)),
])
def test_domain_violations(tag, params):
    with pytest.raises(BadParameters):
        generate(tag, **params)


# (tag, params, predicate, n, m)
CASES = [
    ("S_nk", dict(n=9, k=3), "tree", 9, 4),
    ("P_nk", dict(n=9, k=3), "tree", 9, 4),
    ("S_n", dict(n=6), "tree", 6, 5),
    ("P_n", dict(n=6), "tree", 6, 5),
    ("S_m_n", dict(m=3, n=7), "tree", 7, 3),
    ("Sprime2_n", dict(n=7), "tree", 7, 2),
    ("Pprime_n", dict(n=7), "tree", 7, 5),
    ("D_nkc", dict(n=11, k=3, c=2), "tree", 11, 5),
    ("H_nk", dict(n=9, k=3), "tree", 9, 4),
    ("H_nk", dict(n=4, k=2), "tree", 4, 3),
    ("T_nks", dict(n=13, k=3, s=1), "tree", 13, 6),
    ("W_n", dict(n=8), "tree", 8, 7),
    ("Z_n", dict(n=7), "tree", 7, 6),
    ("Zprime_n", dict(n=8), "tree", 8, 7),
    ("DoubleStar", dict(n1=4, n2=2), "tree", 6, 5),
    ("C_nk", dict(n=8, k=3), ("cycle", 4), 8, 4),
    ("C_n", dict(n=7), ("cycle", 7), 7, 7),
    ("Ck_g_a", dict(k=3, g=2, a=2), ("cycle", 2), 8, 4),
    ("Ck_g_a", dict(k=4, g=3, a=1), ("cycle", 3), 12, 4),
    ("F_nkg", dict(n=10, k=3, g=3), ("cycle", 3), 10, 5),
    ("U1_n", dict(n=6), ("cycle", 2), 6, 2),
    ("U2_n", dict(n=6), ("cycle", 2), 6, 2),
    ("U_ng", dict(n=7, g=4), ("cycle", 4), 7, 7),
    ("K_nk", dict(n=6, k=3), None, 6, 20),
    ("K_nkp", dict(n=9, k=3, p=2), None, 9, 12),
    ("G_all_n", dict(n=4), None, 4, 11),
    ("Hp_n", dict(p=2, n=6), None, 6, 13),
    ("K_n", dict(n=5), None, 5, 10),
]


@pytest.mark.parametrize("tag,params,pred,n,m", CASES, ids=[c[0] for c in CASES])
def test_structure_predicates(tag, params, pred, n, m):
    hg = generate(tag, **params)
    assert (hg.n, hg.m) == (n, m)
    assert hg.is_connected()
    if pred == "tree":
        assert hg.is_hypertree()
    elif pred is not None:
        assert hg.is_unicyclic()
        assert hg.girth() == pred[1]
    assert generate(tag, **params) == hg


def test_every_tag_has_a_case():
    assert {c[0] for c in CASES} == set(TAGS)


def test_uniform_counts():
    assert generate("K_nk", n=7, k=4).m == math.comb(7, 4)
    assert generate("K_nk", n=7, k=4).uniformity() == 4
    assert generate("P_nk", n=13, k=4).m == 4
    D = generate("D_nkc", n=13, k=3, c=2)
    assert D.uniformity() == 3 and D.m == 6


def test_distinguished_vertex():
    assert generate("S_nk", n=9, k=3).degree(0) == 4
    assert generate("S_m_n", m=3, n=7).degree(0) == 3
    assert generate("K_nkp", n=9, k=3, p=2).degree(0) == 6 + 2
    assert generate("Hp_n", p=2, n=6).degree(0) == 7 + 2
    C = generate("Ck_g_a", k=3, g=3, a=2)
    assert C.degree(0) == 4
    F = generate("F_nkg", n=10, k=3, g=3)
    assert F.degree(0) == 3 and len(F.pendant_edges()) == 2


def test_code_identities():
    assert code("S_nk", n=5, k=3) == code("P_nk", n=5, k=3)
    for k in (2, 3, 4):
        assert code("D_nkc", n=3 * (k - 1) + 1, k=k, c=1) == code("P_nk", n=3 * (k - 1) + 1, k=k)
    assert code("W_n", n=5) == code("S_n", n=5)
    assert code("H_nk", n=4, k=2) == code("P_n", n=4)
    assert code("S_m_n", m=4, n=5) == code("S_n", n=5)
    assert code("Ck_g_a", k=2, g=3, a=1) == code("U_ng", n=4, g=3)
    assert code("Ck_g_a", k=3, g=4, a=0) == code("C_nk", n=8, k=3)


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
@pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.75])
def test_pprime_matches_unicyclic_triangle(n, alpha):
    assert abs(rho(generate("Pprime_n", n=n), alpha) - rho(generate("U_ng", n=n, g=3), alpha)) <= 1e-10


def test_parse_params():
    assert parse_params("n=7,k=3") == {"n": 7, "k": 3}
    assert parse_params(" n = 7 ") == {"n": 7}
    assert parse_params("") == {}
    with pytest.raises(ValueError):
        parse_params("n=seven")
    with pytest.raises(ValueError):
        parse_params("n")


def test_family_spec_str_and_hash():
    a = FamilySpec.of("D_nkc", n=9, k=3, c=1)
    b = FamilySpec("D_nkc", {"c": 1, "k": 3, "n": 9})
    assert a == b and hash(a) == hash(b)
    assert "D_nkc" in str(a)


def F(tag, **p):
    return FamilySpec.of(tag, **p)


def test_known_extremal_examples():
    q = ExtremalQuery("uniform_hypertree", {"n": 11, "k": 3}, rank=3)
    assert known_extremal(q) == F("D_nkc", n=11, k=3, c=2)
    assert known_extremal(ExtremalQuery("uniform_hypertree", {"n": 9, "k": 3}, rank=3)) == F("H_nk", n=9, k=3)
    assert known_extremal(ExtremalQuery("uniform_hypertree", {"n": 5, "k": 2}, rank=3)) == F("P_nk", n=5, k=2)
    assert known_extremal(ExtremalQuery("hypertree_edges", {"n": 7, "m": 3})) == F("S_m_n", m=3, n=7)
    q = ExtremalQuery("unicyclic", {"n": 6}, rank=2, largest=False)
    assert known_extremal(q) == F("U_ng", n=6, g=5)
    assert known_extremal(ExtremalQuery("pendant", {"n": 6, "p": 4})) == F("S_m_n", m=4, n=6)
    assert known_extremal(ExtremalQuery("pendant", {"n": 6, "p": 2})) == F("Hp_n", p=2, n=6)
    assert known_extremal(ExtremalQuery("uniform_pendant", {"n": 7, "k": 3, "p": 2})) == F("D_nkc", n=7, k=3, c=1)
    assert known_extremal(ExtremalQuery("uniform_pendant", {"n": 6, "k": 3, "p": 0})) == F("K_nk", n=6, k=3)
    assert known_extremal(ExtremalQuery("uniform_pendant", {"n": 9, "k": 3, "p": 2})) == F("K_nkp", n=9, k=3, p=2)
    q = ExtremalQuery("linear_uniform_unicyclic", {"n": 8, "k": 3})
    assert known_extremal(q) == F("Ck_g_a", k=3, g=3, a=1)


def test_known_extremal_uncovered():
    with pytest.raises(UncoveredClass):
        known_extremal(ExtremalQuery("hypertree", {"n": 7}, rank=4))
    with pytest.raises(UncoveredClass):
        known_extremal(ExtremalQuery("unicyclic", {"n": 6}, rank=3))
    with pytest.raises(UncoveredClass):
        known_extremal(ExtremalQuery("graphs", {"n": 6}))
    with pytest.raises(AlphaOutOfRange):
        known_extremal(ExtremalQuery("hypertree", {"n": 7}), alpha=1.2)
