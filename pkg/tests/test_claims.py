import json

import pytest

from chromcore.claims import REGISTRY, certificate, claim_ids, reverify_certificate, verify_claim
from chromcore.errors import InputError
from chromcore.families import cycle, wheel


def test_registry_covers_claims():
    ids = claim_ids()
    assert len(ids) == len(set(ids))
    for cid in ["lemma-2.1", "prop-2.2-i", "prop-2.2-xi", "thm-2.3", "cor-2.3-i", "cor-2.3-ii", "thm-jaco-perfect",
                "thm-3.1", "thm-3.2", "thm-3.3", "conj-3.4", "conj-3.5", "lemma-3.4", "conj-3.6",
                "prop-complement-existence", "thm-complement", "cor-complement-i", "cor-complement-ii",
                "prop-chi-minus", "thm-line-tree", "fact-strong-k4", "fact-strong-k5"]:
        assert cid in REGISTRY
    assert {c.kind for c in REGISTRY.values()} == {"theorem", "conjecture"}
    assert {cid for cid, c in REGISTRY.items() if c.kind == "conjecture"} == {"conj-3.4", "conj-3.5", "conj-3.6"}


def test_unknown_claim():
    with pytest.raises(InputError):
        verify_claim("thm-9.9")


def test_odd_cycles_pass():
    r = verify_claim("prop-2.2-iii", 5)
    assert (r.corpus_size, r.passes, r.counterexamples, r.skipped) == (4, 4, [], [])


def test_cartesian_sweep_all_pass():
    r = verify_claim("thm-3.3", 1)
    assert r.passes == r.corpus_size == 100


def test_lex_conjecture_witnesses_are_smaller():
    r = verify_claim("conj-3.6", 1)
    assert r.skipped and all("oracle limit" in s["reason"] for s in r.skipped)
    for cx in r.counterexamples:
        core, predicted = cx["certificates"]
        assert core["chi"] == predicted["chi"] and core["si"] < predicted["si"]


def test_accounting_and_certificates(all_reports):
    for cid, r in all_reports.items():
        assert r.passes + len(r.counterexamples) + len(r.skipped) == r.corpus_size, cid
        assert all(s["reason"] for s in r.skipped)
        for cx in r.counterexamples:
            assert cx["certificates"]
            assert all(reverify_certificate(c) for c in cx["certificates"])


def test_report_is_deterministic():
    for cid in ["thm-line-tree", "prop-2.2-i", "conj-3.6"]:
        a = json.dumps(verify_claim(cid, 11).to_json(timing=False))
        b = json.dumps(verify_claim(cid, 11).to_json(timing=False))
        assert a == b


def test_report_field_order():
    keys = list(verify_claim("prop-2.2-v").to_json())
    assert keys == ["claim_id", "kind", "description", "seed", "limits", "corpus_size", "passes",
                    "counterexamples", "skipped", "runtime_ms"]


def test_seed_changes_random_corpus():
    a = verify_claim("thm-line-tree", 1)
    b = verify_claim("thm-line-tree", 2)
    assert a.corpus_size == b.corpus_size and a.passes == a.corpus_size and b.passes == b.corpus_size


def test_tampered_certificate_rejected():
    cert = certificate(wheel(5), range(6), "whole", omega=True, critical=True)
    assert reverify_certificate(cert)
    for key, value in [("si", 15), ("chi", 3), ("omega", 4), ("vertex_critical", False), ("vertices", [0, 9])]:
        assert not reverify_certificate({**cert, key: value})


def test_capability_items_are_skipped_not_dropped():
    r = verify_claim("fact-strong-k5")
    assert [s["instance"] for s in r.skipped] == ["C5*C7"]
    r = verify_claim("fact-strong-k5", size_limits={"product_search": 9})
    assert len(r.skipped) == 2 and r.passes == 0


def test_limits_recorded():
    r = verify_claim("prop-2.2-iii", size_limits={"order": 5})
    assert r.limits["order"] == 5


def test_cycle_certificate_is_critical():
    cert = certificate(cycle(7), range(7), "c7", critical=True, edge_critical=True)
    assert cert["vertex_critical"] and cert["edge_critical"] and cert["si"] == 14
