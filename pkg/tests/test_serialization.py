import json
from fractions import Fraction

import pytest

from combnull import (
    QQ,
    ZZ,
    MonicFamily,
    MultisetGrid,
    ParseError,
    PuncturedGrid,
    VanishingSpec,
    Zmod,
    level_certificate,
    mixed_certificate,
    reduce,
)
from combnull.serialization import (
    certificate_to_json,
    grid_from_json,
    grid_to_json,
    outcome_to_json,
    punctured_from_json,
    punctured_to_json,
    spec_from_json,
    spec_to_json,
    verify_certificate_json,
)
from conftest import P


def test_grid_round_trip():
    grid = MultisetGrid.build(ZZ, [[0, 1], [2]], [{0: 2, 1: 1}, {2: 3}])
    doc = grid_to_json(grid)
    assert doc["ring"] == "ZZ"
    again = grid_from_json(json.loads(json.dumps(doc)))
    assert again == grid


def test_grid_compact_form():
    grid = grid_from_json({"ring": "ZZ", "S": [[0, 1], [0, 1]]})
    assert grid.axes[0].psi == {0: 1, 1: 1}
    explicit = grid_from_json(
        {"S": [[0, 1]], "psi": [{"0": 2, "1": 1}]}, ring=ZZ
    )
    assert explicit.axes[0].psi == {0: 2, 1: 1}
    with pytest.raises(ParseError):
        grid_from_json({"S": [[0, 1]]})  # no ring anywhere


def test_rational_grid_round_trip():
    grid = MultisetGrid.build(QQ, [[Fraction(1, 2), 0]])
    doc = grid_to_json(grid)
    again = grid_from_json(json.loads(json.dumps(doc)))
    assert again == grid


def test_punctured_round_trip():
    pg = PuncturedGrid.build(
        MultisetGrid.build(ZZ, [[0, 1], [0, 1]]), [[0], []]
    )
    doc = punctured_to_json(pg)
    again = punctured_from_json(json.loads(json.dumps(doc)))
    assert again == pg


def test_spec_round_trip():
    spec = VanishingSpec.build(
        ZZ, [[0, 1]], {(0,): {(1,)}, (1,): {(2,), (1,)}}
    )
    doc = spec_to_json(spec)
    again = spec_from_json(json.loads(json.dumps(doc)))
    assert again.axes == spec.axes
    assert again.B == spec.B


def test_outcome_json_shape():
    f = P("x1^2*x2 + x2", nvars=2)
    out = reduce(f, MonicFamily.build([P("x1^2 - 1", nvars=2)]))
    doc = outcome_to_json(out, f)
    assert doc["checks"] == {
        "identity": True,
        "support": True,
        "remainder_reduced": True,
    }
    assert doc["quotients"]["0"] == "x2"
    assert doc["remainder"] == "2*x2"
    checks = verify_certificate_json(json.loads(json.dumps(doc)))
    assert checks["valid"]


def test_certificate_json_self_verifies():
    grid = MultisetGrid.build(ZZ, [[0, 1], [0, 1]])
    f = P("x1^2 - x1", nvars=2) * P("x2^2 - x2", nvars=2)
    cert = level_certificate(f, grid, 2)
    doc = certificate_to_json(cert)
    assert doc["basis"] == "I_t" and doc["t"] == 2
    checks = verify_certificate_json(json.loads(json.dumps(doc)))
    assert checks == {
        "identity": True,
        "support": True,
        "remainder_reduced": True,
        "valid": True,
    }


def test_mixed_certificate_json_kind():
    pg = PuncturedGrid.build(MultisetGrid.build(ZZ, [[0, 1]]), [[0]])
    member = P("x1 - 1")
    cert = mixed_certificate(member, pg, 1)
    doc = certificate_to_json(cert)
    assert doc["basis"] == "mixed"
    assert verify_certificate_json(doc)["valid"]


def test_tampered_certificate_fails():
    grid = MultisetGrid.build(ZZ, [[0, 1]])
    cert = level_certificate(P("x1^2 - x1"), grid, 1)
    doc = certificate_to_json(cert)
    broken = json.loads(json.dumps(doc))
    broken["quotients"]["(1,)"] = "x1 + 1"
    checks = verify_certificate_json(broken)
    assert not checks["identity"]
    assert not checks["valid"]

    padded = json.loads(json.dumps(doc))
    padded["remainder"] = "x1^2"
    checks = verify_certificate_json(padded)
    assert not checks["valid"]


def test_zmod_certificate_round_trip():
    ring = Zmod(5)
    grid = MultisetGrid.build(ring, [[0, 1, 4]])
    member = grid.axis_poly(0) * P("x1 - 2", ring=ring)
    cert = level_certificate(member, grid, 1)
    doc = certificate_to_json(cert)
    assert verify_certificate_json(json.loads(json.dumps(doc)))["valid"]
