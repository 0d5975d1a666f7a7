import json

import pytest

import resolvekit as rk
from resolvekit import (all_pairs_distances, certify_all, certify_benes,
                        certify_butterfly, certify_silicate, level_of_label,
                        solve_k_metric_dimension)


@pytest.mark.parametrize("r, claimed", [(3, 16), (4, 32)])
def test_butterfly_certificates(r, claimed):
    cert = certify_butterfly(r)
    assert cert.claimed == claimed
    assert cert.twin_lower_bound == claimed
    assert len(cert.candidate_labels) == claimed
    assert cert.candidate_resolves
    assert cert.verdict == "proven"
    assert set(cert.twin_labels) == set(cert.candidate_labels)


def test_butterfly_candidate_is_outer_levels():
    cert = certify_butterfly(3)
    assert {level_of_label(lab) for lab in cert.candidate_labels} == {0, 3}


def test_butterfly_refutes_prior_claim():
    cert = certify_butterfly(3)
    comp = cert.conjecture_comparison
    assert comp == {"source_bound": 32, "computed": 16, "refuted": True}


@pytest.mark.parametrize("r, claimed", [(3, 24), (4, 48)])
def test_benes_certificates(r, claimed):
    cert = certify_benes(r)
    assert cert.claimed == claimed
    assert cert.twin_lower_bound == claimed
    assert cert.verdict == "proven"
    levels = {level_of_label(lab) for lab in cert.candidate_labels}
    assert levels == {0, r, 2 * r}


def test_benes_refutes_prior_claim():
    comp = certify_benes(3).conjecture_comparison
    assert comp == {"source_bound": 52, "computed": 24, "refuted": True}


@pytest.mark.parametrize("n, claimed", [(2, 24), (3, 36)])
def test_silicate_certificates(n, claimed):
    cert = certify_silicate(n)
    assert cert.claimed == claimed
    assert cert.twin_lower_bound == claimed
    assert cert.verdict == "proven"
    assert cert.note is None
    assert len(cert.transversal_labels) == 6 * n
    assert cert.transversal_resolves
    assert all(lab.startswith("sl:apex:") for lab in cert.transversal_labels)


def test_silicate_prior_bracket():
    comp = certify_silicate(2).conjecture_comparison
    assert comp == {"source_bound": [13, 42], "computed": 24, "within": True}


def test_silicate_transversal_is_one_per_pair():
    cert = certify_silicate(2)
    g = rk.silicate(2)
    part = rk.twin_partition(g)
    chosen = {g.vertex(lab) for lab in cert.transversal_labels}
    for cls in part.nontrivial():
        assert len(chosen & set(cls.members)) == 1


@pytest.mark.parametrize("family, builder, param, claimed", [
    ("bf", rk.butterfly, 5, 64),
    ("benes", rk.benes, 4, 48),
    ("sl", rk.silicate, 3, 36),
])
def test_sandwich_agrees_with_solver(family, builder, param, claimed):
    # Forcing alone closes these instances: the forced set is the whole
    # witness, so the exact solver terminates without branching and must
    # agree with the certified value.
    g = builder(param)
    dm = all_pairs_distances(g)
    res = solve_k_metric_dimension(g, dm, 2)
    assert res.value == claimed
    assert res.forced == res.witness
    assert res.nodes_explored == 0
    cert = {"bf": certify_butterfly, "benes": certify_benes,
            "sl": certify_silicate}[family](param)
    assert cert.claimed == claimed and cert.verdict == "proven"
    assert set(cert.candidate_labels) == {g.labels[v] for v in res.witness}


def test_certify_all_five_three():
    report = certify_all(max_r=5, max_n=3)
    assert len(report.certificates) == 8
    assert report.all_proven
    for cert in report.certificates:
        assert cert.twin_lower_bound == len(cert.candidate_labels)


def test_report_json_shape():
    report = certify_all(max_r=3, max_n=2)
    doc = report.to_json_dict()
    assert doc["schema"] == "1"
    assert doc["summary"] == {"total": 3, "proven": 3, "failed": 0}
    families = [(c["family"], c["param"]) for c in doc["certificates"]]
    assert families == [("bf", 3), ("benes", 3), ("sl", 2)]
    for c in doc["certificates"]:
        assert set(c) >= {"family", "param", "claimed", "twin_lower_bound",
                          "candidate_size", "candidate_labels",
                          "resolving_check", "conjecture_comparison",
                          "verdict"}
        assert c["resolving_check"]["k"] == 2
        assert c["resolving_check"]["pass"] is True
        assert "violating_pair" not in c["resolving_check"]
    # serialization is stable
    assert json.dumps(doc) == json.dumps(certify_all(max_r=3, max_n=2).to_json_dict())


def test_certificate_text_mentions_verdict():
    text = certify_butterfly(3).to_text()
    assert "verdict" in text and "proven" in text
    assert "computed 16 < 32" in text


def test_certify_rejects_bad_params():
    with pytest.raises(ValueError):
        certify_butterfly(1)
    with pytest.raises(ValueError):
        certify_silicate(0)
