"""Serialization round trips and schema validation."""

import json
from fractions import Fraction

import pytest

from jacdec import jsonio
from jacdec.cyclofield import CyclotomicField
from jacdec.exactlinalg import Matrix

F5 = CyclotomicField(5)


def test_cycnum_encoding_uses_fraction_strings():
    e = F5.element((Fraction(-1, 2), -1, 1, -2))
    assert jsonio.cycnum_to_json(e) == ["-1/2", "-1", "1", "-2"]
    assert jsonio.cycnum_from_json(F5, ["-1/2", "-1", "1", "-2"]) == e


def test_field_round_trip():
    data = jsonio.field_to_json(F5)
    assert data == {"conductor": 5}
    assert jsonio.field_from_json(data) is F5


def test_matrix_round_trip(z_paper):
    data = jsonio.matrix_to_json(z_paper)
    assert data["rows"] == 4 and data["cols"] == 4
    assert data["field"] == {"conductor": 5}
    back = jsonio.matrix_from_json(data)
    assert back == z_paper


def test_int_matrix_round_trip(rho_phi):
    data = jsonio.int_matrix_to_json(rho_phi)
    assert jsonio.int_matrix_from_json(data) == tuple(tuple(r) for r in rho_phi)


def test_int_matrix_rejects_non_integer_entries():
    with pytest.raises(ValueError):
        jsonio.int_matrix_from_json({"rows": 1, "cols": 1, "entries": [["1/2"]]})


def test_riemann_round_trip(z_paper):
    data = jsonio.riemann_to_json(z_paper, 1)
    Z, k = jsonio.riemann_from_json(data)
    assert Z == z_paper and k == 1


def test_riemann_embedding_defaults_and_validation(z_paper):
    data = jsonio.riemann_to_json(z_paper, 1)
    del data["embedding_k"]
    _, k = jsonio.riemann_from_json(data)
    assert k == 1
    data["embedding_k"] = 0
    with pytest.raises(ValueError):
        jsonio.riemann_from_json(data)


def test_lattice_round_trip(b1):
    data = jsonio.lattice_to_json(b1)
    assert jsonio.lattice_from_json(data) == tuple(tuple(r) for r in b1)


def test_group_fixture_contents(group_data):
    assert list(group_data.generators) == ["a", "c"]
    assert group_data.relations == ("a^10", "b^2", "c^2", "[a,b]", "[b,c]", "cacab")
    assert group_data.signature.orbit_genus == 0
    assert group_data.signature.periods == (2, 4, 10)
    assert group_data.skep == ("c", "c a^-1", "a")


def test_group_assignments_include_derived(group_data, assignments):
    assert set(assignments) == {"a", "b", "c"}
    from jacdec.grouprep import evaluate_word

    assert assignments["b"] == evaluate_word("(ac)^2", assignments)


def test_load_fixture_requires_schema_version(tmp_path, monkeypatch):
    bad = {"B": [[1, 0]]}
    (tmp_path / "no_schema.json").write_text(json.dumps(bad))
    monkeypatch.setenv("JACDEC_FIXTURES", str(tmp_path))
    assert jsonio.fixtures_dir() == tmp_path
    with pytest.raises(ValueError):
        jsonio.load_fixture("no_schema.json")


def test_fixtures_env_override(tmp_path, monkeypatch):
    payload = {"schema_version": 1, "B": [[1, 0], [0, 1]]}
    (tmp_path / "tiny.json").write_text(json.dumps(payload))
    monkeypatch.setenv("JACDEC_FIXTURES", str(tmp_path))
    assert jsonio.load_fixture("tiny.json") == payload


def test_wrong_schema_version_rejected():
    with pytest.raises(ValueError):
        jsonio.matrix_from_json(
            {"schema_version": 99, "field": {"conductor": 1},
             "rows": 1, "cols": 1, "entries": [[["1"]]]}
        )


def test_malformed_payloads_rejected():
    with pytest.raises(ValueError):
        jsonio.matrix_from_json({"rows": 1})
    with pytest.raises(ValueError):
        jsonio.field_from_json({"conductor": 0})
    with pytest.raises(ValueError):
        jsonio.lattice_from_json({"B": "nope"})
    with pytest.raises(ValueError):
        jsonio.cycnum_from_json(F5, ["1", "2"])


def test_write_payload_is_deterministic(tmp_path):
    payload = {"b": 2, "a": 1, "schema_version": 1}
    p1 = tmp_path / "one.json"
    p2 = tmp_path / "two.json"
    jsonio.write_payload(p1, payload)
    jsonio.write_payload(p2, dict(reversed(list(payload.items()))))
    assert p1.read_bytes() == p2.read_bytes()
    assert p1.read_text().endswith("\n")
    assert jsonio.read_payload(p1) == payload


def test_bundled_fixture_entries_match_pinned_values(z_paper):
    zeta = F5.zeta()
    expected_00 = (F5.from_rational(Fraction(-1, 2)) - zeta
                   + F5.zeta(2) - 2 * F5.zeta(3))
    assert z_paper[0, 0] == expected_00
    assert z_paper.is_symmetric()
