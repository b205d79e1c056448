"""Reducibility replay: for every catalogued kind, every host fixture and
every sampled proper weighting of the derived graph, the extension must
succeed.  This is the executable content of the reducibility lemmas."""

import pytest

from madweight.configs import (
    CATALOG_TAGS, DEGEN_4CYC, DEGEN_TRI, W2_52, W2_83, W3_52, W3_83,
    detect_first,
)
from madweight.gen import config_host, host_variants
from madweight.oracle import enumerate_proper
from madweight.reducer import extend
from madweight.weighting import Mode, violations

PER_HOST_LIMIT = 6  # acceptance reruns this at the spec'd 50


def replay_cases():
    cases = []
    for cat in (W3_52, W2_52, W2_83, W3_83):
        mode = Mode.EDGE3 if cat in (W3_52, W3_83) else Mode.TOTAL2
        for tag in CATALOG_TAGS[cat]:
            for k in range(host_variants(cat, tag)):
                cases.append((cat, cat, tag, k, mode))
    for tag in CATALOG_TAGS[DEGEN_TRI]:
        for k in range(host_variants(DEGEN_TRI, tag)):
            cases.append((DEGEN_TRI, W3_83, tag, k, Mode.EDGE3))
            cases.append((DEGEN_TRI, W2_83, tag, k, Mode.TOTAL2))
    for tag in CATALOG_TAGS[DEGEN_4CYC]:
        for k in range(host_variants(DEGEN_4CYC, tag)):
            cases.append((DEGEN_4CYC, W3_83, tag, k, Mode.EDGE3))
    return cases


@pytest.mark.parametrize("host_cat,detect_cat,tag,variant,mode", replay_cases())
def test_replay(host_cat, detect_cat, tag, variant, mode):
    g = config_host(host_cat, tag, variant)
    inst = detect_first(g, detect_cat)
    assert inst is not None and inst.kind.tag == tag
    derived = g.delete_edges(inst.deleted)
    ws = enumerate_proper(derived, mode, limit=PER_HOST_LIMIT)
    assert ws, f"derived graph of {host_cat}.{tag} v{variant} has no proper weighting"
    for w0 in ws:
        w = extend(g, inst, w0, mode)
        assert violations(g, w) == []
