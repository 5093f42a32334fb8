import os
from pathlib import Path

import pytest

import galct

FIXTURES = Path(os.environ.get("GALCT_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "corpus" / "fixtures"))


def test_family_group():
    g = galct.family("dihedral:3")
    assert g.order == 16
    assert g.degree == 16
    assert len(g.generators) == 2
    assert "16" in repr(g)


def test_analyze_dihedral():
    doc = galct.analyze("dihedral:3")
    assert doc["counts"]["classes"] == 7
    assert doc["counts"]["rational_classes"] == 5
    assert doc["counts"]["rational_characters"] == 5
    assert doc["solvable"] is True


def test_cyclic_five_has_one_rational_class():
    counts = galct.analyze(galct.from_generators(5, [[1, 2, 3, 4, 0]], "C5"))["counts"]
    assert counts["rational_classes"] == 1
    assert counts["irrational_classes"] == 4


def test_character_table_export():
    table = galct.character_table("cyclic:3")
    assert len(table["rows"]) == 3


@pytest.mark.skipif(not (FIXTURES / "sg_32_42.json").exists(), reason="fixture not exported")
def test_fixture_counts_differ():
    g = galct.load_group(FIXTURES / "sg_32_42.json")
    doc = galct.analyze(g)
    assert doc["fixture"]["status"] == "Pass"
    assert doc["counts"]["irrational_classes"] == 6
    assert doc["counts"]["irrational_characters"] == 4


def test_verify_checks():
    outcomes = galct.verify("symmetric:4", "A")
    assert outcomes and all(o["status"] == "Pass" for o in outcomes)
    sn = galct.verify_standalone("sn")
    assert len(sn) == 5
    assert all(o["status"] == "Pass" for o in sn)


def test_scan_small():
    doc = galct.scan(max_order=12, jobs=2)
    assert doc["tally"]["Fail"] == 0
    assert len(doc["groups"]) > 10


def test_errors_raise():
    with pytest.raises(galct.GalctError, match="unknown family"):
        galct.family("tetrahedral:4")
    with pytest.raises(ValueError):
        galct.verify("cyclic:4", "Z")
    with pytest.raises(galct.GalctError):
        galct.from_generators(3, [[0, 0, 1]])
    with pytest.raises(galct.GalctError):
        galct.parse_group("{")
