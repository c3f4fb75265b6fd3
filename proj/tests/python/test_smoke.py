import pytest

import gradid


def test_field_info():
    info = gradid.field_info(4)
    assert info["characteristic"] == 2
    assert info["modulus"] == [1, 1, 1]
    assert len(info["elements"]) == 4


def test_normalize_and_commutator():
    assert gradid.normalize("y1*z1 - y1z1", 3) == "0"
    assert gradid.commutator("y1", "y1", 2) == "0"
    assert gradid.normalize(gradid.commutator("z1", "y1", 3), 3) == gradid.normalize("z1y1 - y1z1", 3)


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        gradid.normalize("y1 +", 2)


def test_check_identity():
    assert gradid.check_identity("y1^2 - y1", 2, "ut2-canonical")["identity"]
    res = gradid.check_identity("z1*z2", 2, "ut3-B")
    assert not res["identity"]
    assert res["value"] == "e13"


def test_cap_exceeded():
    with pytest.raises(gradid.CapExceeded):
        gradid.closure_rank("ut2-canonical", 2, 4, 4, 9)


def test_generators_and_family():
    assert len(gradid.generators("ut3-B", 3)) == 9
    fam = gradid.spanning_family("ut2-canonical", 2, 1, 1, 3)
    assert len(fam) == 5
    assert gradid.closure_rank("ut2-canonical", 2, 1, 1, 3) == (14, 9)


def test_reduce():
    res = gradid.reduce("y1^2 - y1", "ut2-canonical", 2, 1, 1, 3)
    assert not res["residual"]
    assert res["terms"] == []


def test_verify_basis(tmp_path):
    rep = gradid.verify_basis("ut2-canonical", 2, 1, 1, 3, cache_dir=str(tmp_path))
    assert rep["schema"] == "gradid-report/1"
    assert rep["verdict"]["pinch"] is True
    assert rep["spanning"]["dim_ideal"] == 9


def test_lemma_suite():
    assert all(passed for _, passed, _ in gradid.lemma_suite(cases=20))
