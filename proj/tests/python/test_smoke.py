# Smoke tests for the Python bindings: every exposed operation runs once and
# the frozen small-group outcomes hold. Deep coverage lives in the C++ suite.

import pytest

import isocert


def test_catalog_and_group_basics():
    assert "A4" in isocert.catalog_ids()
    g = isocert.catalog_group("A4")
    assert (g.degree, g.order, g.abelian, g.exponent) == (4, 12, False, 6)
    rebuilt = isocert.Group.from_generators(g.degree, g.generators)
    assert rebuilt.same_realization(g)


def test_group_text_parsing():
    g = isocert.parse_group("degree: 3\ngen: (1,2,3)\n")
    assert g.order == 3
    with pytest.raises(isocert.ParseError):
        isocert.catalog_group("no-such-group")


def test_rank_and_qd_reports():
    a4 = isocert.catalog_group("A4")
    profile = isocert.rank(a4)
    assert profile["rank"] == 2
    assert profile["per_prime"] == {2: 2, 3: 1}

    assert isocert.qd_free(a4)["qd_free"] is True
    qd3 = isocert.qd_free(isocert.catalog_group("Qd3"))
    assert qd3["qd_free"] is False
    assert qd3["per_prime"][3] == "involved"


def test_character_table_shape():
    rows = isocert.character_table(isocert.catalog_group("Q8"))
    assert len(rows) == 5
    assert sorted(row[0] for row in rows) == ["1", "1", "1", "1", "2"]


def test_fusion_and_search():
    a4 = isocert.catalog_group("A4")
    fusion = isocert.fusion(a4, 2)
    assert sum(len(block) for block in fusion["blocks"]) == 4

    found = isocert.search_effective(a4, 2)
    assert found["found"] and found["dimension"] == 3
    assert found["multiplicities"] == [0, 1, 1, 1]

    missed = isocert.search_effective(a4, 2, bound=2)
    assert not missed["found"] and missed["bound"] == 2


def test_certify_and_verify_round_trip():
    a4 = isocert.catalog_group("A4")
    cert = isocert.certify(a4, label="A4")
    assert cert.verdict == "Certified"
    assert (cert.family_dimension, cert.sphere_dimension) == (3, 5)
    assert all(cert.flags.values())
    fixed_orders = sorted(rec["order"] for rec in cert.subgroups if rec["sphere_dim"] is not None)
    assert fixed_orders == [1, 2]

    text = cert.serialize()
    again = isocert.parse_certificate(text)
    assert again.serialize() == text
    assert isocert.verify(again, a4)

    tampered = isocert.parse_certificate(text.replace("sphere-dimension: 5", "sphere-dimension: 7"))
    assert not isocert.verify(tampered, a4)


def test_verdicts_and_limits():
    assert isocert.certify(isocert.catalog_group("SL2_3")).verdict == "RankOne"
    assert isocert.certify(isocert.catalog_group("Qd3")).verdict == "NotQdFree"
    with pytest.raises(isocert.ScaleLimitError):
        isocert.certify(isocert.catalog_group("A5"), max_order=50)
