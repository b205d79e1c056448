from fractions import Fraction

import pytest

from madweight.configs import (
    CATALOG_TAGS, DEGEN_4CYC, DEGEN_TRI, W2_52, W2_83, W3_52, W3_83,
    detect_all, detect_first,
)
from madweight.errors import InvalidParams, NotCubic
from madweight.gen import (
    GenSpec, PETERSEN, config_host, cubic_plus_pendants, gadget_base_weighting,
    generate, host_variants, nonred_fixture, random_cubic, random_mad,
)
from madweight.graph import Graph
from madweight.mad import average_degree, mad_exact, mad_less_than
from madweight.oracle import count_extensions
from madweight.weighting import Mode, violations


def test_generate_deterministic():
    s = GenSpec.make("random_mad", seed=5, n=20, bound="8/3")
    assert generate(s).edge_pairs() == generate(s).edge_pairs()
    t = GenSpec.make("tree", seed=9, n=15)
    assert generate(t).edge_pairs() == generate(t).edge_pairs()


def test_cycle_and_path():
    assert generate(GenSpec.make("cycle", n=5)).m == 5
    assert generate(GenSpec.make("path", n=4)).m == 3
    with pytest.raises(InvalidParams):
        generate(GenSpec.make("cycle", n=2))


def test_random_mad_contract():
    for seed in range(25):
        g = random_mad(8 + seed, Fraction(8, 3), seed)
        assert mad_less_than(g, Fraction(8, 3))
        assert all(g.degree(v) >= 1 for v in range(g.n))
        assert not any(len(c) == 2 for c in g.components())


def test_cubic_plus_pendants_k4():
    g = cubic_plus_pendants(Graph(4, [(0, 1), (0, 2), (0, 3),
                                      (1, 2), (1, 3), (2, 3)]))
    assert g.n == 8 and g.m == 10
    assert average_degree(g) == Fraction(5, 2)
    assert mad_exact(g).value == 3
    with pytest.raises(NotCubic):
        cubic_plus_pendants(Graph(3, [(0, 1), (1, 2)]))


def test_random_cubic():
    g = random_cubic(10, 3)
    assert all(g.degree(v) == 3 for v in range(10))
    g5 = random_cubic(14, 3, girth_at_least=5)
    assert all(g5.degree(v) == 3 for v in range(14))


def test_petersen_plus_pendants_has_only_F():
    g = cubic_plus_pendants(Graph(10, PETERSEN))
    insts = detect_all(g, W2_83)
    tags = {i.kind.tag for i in insts}
    assert tags == {"F"}
    assert detect_first(g, W2_83).kind.tag == "F"


def test_nonred_left_not_extendable():
    g, w, ms = nonred_fixture("left")
    derived = g.delete_edges(ms.deleted)
    base_check = w.copy()
    assert violations(derived, base_check) == []
    assert count_extensions(g, w, ms, Mode.TOTAL2) == 0


def test_nonred_left_perturbed_extendable():
    g, w, ms = nonred_fixture("left", perturbed=True)
    assert count_extensions(g, w, ms, Mode.TOTAL2) > 0


def test_nonred_right_not_extendable():
    g, w, ms = nonred_fixture("right")
    derived = g.delete_edges(ms.deleted)
    assert violations(derived, w.copy()) == []
    assert count_extensions(g, w, ms, Mode.TOTAL2) == 0


def test_nonred_right_perturbed_extendable():
    g, w, ms = nonred_fixture("right", perturbed=True)
    assert count_extensions(g, w, ms, Mode.TOTAL2) > 0


def test_gadget_base_weighting_api():
    w = gadget_base_weighting("left")
    assert w.mode is Mode.TOTAL2 and w.edge_weights


def test_nonred_roles_classify():
    from madweight.graph import classify
    g, _, _ = nonred_fixture("left")
    assert classify(g, 1).is_beta_prime and classify(g, 2).is_beta_prime
    g2, _, _ = nonred_fixture("right")
    c = classify(g2, 0)
    assert c.is_beta12
    assert classify(g2, 1).degree == 2 and classify(g2, 2).degree == 2


HOST_CASES = []
for _cat in (W3_52, W2_52, W2_83, W3_83):
    for _tag in CATALOG_TAGS[_cat]:
        for _k in range(host_variants(_cat, _tag)):
            HOST_CASES.append((_cat, _tag, _k))
for _cat in (DEGEN_TRI, DEGEN_4CYC):
    for _tag in CATALOG_TAGS[_cat]:
        for _k in range(host_variants(_cat, _tag)):
            HOST_CASES.append((_cat, _tag, _k))


# the beta'-triangle subcase is symmetric: all three corners are sites
MULTI_SITE = {(W2_83, "F", 1): 3}


@pytest.mark.parametrize("catalog,tag,variant", HOST_CASES)
def test_config_host_detects_its_kind(catalog, tag, variant):
    g = config_host(catalog, tag, variant)
    main = {DEGEN_TRI: W3_83, DEGEN_4CYC: W3_83}.get(catalog, catalog)
    inst = detect_first(g, main)
    assert inst is not None
    assert (inst.kind.catalog, inst.kind.tag) == (catalog, tag)
    same = [i for i in detect_all(g, catalog) if i.kind.tag == tag]
    assert len(same) == MULTI_SITE.get((catalog, tag, variant), 1)
