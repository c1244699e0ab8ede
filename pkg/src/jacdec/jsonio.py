"""JSON codecs for field elements, matrices and the bundled data files.

Cyclotomic numbers travel as arrays of phi(n) coefficient strings "p/q",
the field itself as {"conductor": n}.  Matrices are {"rows", "cols",
"entries"} with integer entries for lattice data and coefficient arrays
for field data.  A Riemann matrix adds "embedding_k".
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .cyclofield import CycNum, CyclotomicField
from .exactlinalg import Matrix
from .grouprep import Signature, evaluate_word

__all__ = [
    "SCHEMA_VERSION",
    "GroupData",
    "cycnum_to_json",
    "cycnum_from_json",
    "field_to_json",
    "field_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "int_matrix_to_json",
    "int_matrix_from_json",
    "riemann_to_json",
    "riemann_from_json",
    "lattice_to_json",
    "lattice_from_json",
    "group_from_json",
    "read_payload",
    "write_payload",
    "fixtures_dir",
    "load_fixture",
]

SCHEMA_VERSION = 1


def cycnum_to_json(x: CycNum) -> list[str]:
    return [str(c) for c in x.coeffs]


def cycnum_from_json(field, data) -> CycNum:
    if not isinstance(data, list) or len(data) != field.degree:
        raise ValueError(
            f"expected {field.degree} coefficient strings, got {data!r}"
        )
    try:
        coords = tuple(Fraction(str(c)) for c in data)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad coefficient in {data!r}: {exc}") from None
    return field.element(coords)


def field_to_json(field) -> dict:
    return {"conductor": field.n}


def field_from_json(data):
    if not isinstance(data, dict) or "conductor" not in data:
        raise ValueError(f"field payload must be {{'conductor': n}}, got {data!r}")
    n = data["conductor"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"conductor must be a positive integer, got {n!r}")
    return CyclotomicField(n)


def matrix_to_json(M: Matrix) -> dict:
    return {
        "field": field_to_json(M.field),
        "rows": M.rows,
        "cols": M.cols,
        "entries": [
            [cycnum_to_json(M[i, j]) for j in range(M.cols)]
            for i in range(M.rows)
        ],
    }


def matrix_from_json(data) -> Matrix:
    _check_schema(data)
    _expect_keys(data, ("field", "rows", "cols", "entries"), "matrix")
    field = field_from_json(data["field"])
    entries = data["entries"]
    r, c = data["rows"], data["cols"]
    if len(entries) != r or any(len(row) != c for row in entries):
        raise ValueError(f"entry grid does not match shape {r}x{c}")
    return Matrix(
        field, [[cycnum_from_json(field, e) for e in row] for row in entries]
    )


def int_matrix_to_json(rows) -> dict:
    rows = [list(r) for r in rows]
    return {"rows": len(rows), "cols": len(rows[0]) if rows else 0, "entries": rows}


def int_matrix_from_json(data):
    _expect_keys(data, ("rows", "cols", "entries"), "integer matrix")
    entries = data["entries"]
    r, c = data["rows"], data["cols"]
    if len(entries) != r or any(len(row) != c for row in entries):
        raise ValueError(f"entry grid does not match shape {r}x{c}")
    for row in entries:
        for e in row:
            if not isinstance(e, int):
                raise ValueError(f"integer matrix has non-integer entry {e!r}")
    return tuple(tuple(row) for row in entries)


def riemann_to_json(Z: Matrix, embedding_k: int) -> dict:
    payload = matrix_to_json(Z)
    payload["embedding_k"] = embedding_k
    return payload


def riemann_from_json(data):
    Z = matrix_from_json(data)
    k = data.get("embedding_k", 1)
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"embedding_k must be a positive integer, got {k!r}")
    return Z, k


def lattice_to_json(B) -> dict:
    return {"schema_version": SCHEMA_VERSION, "B": int_matrix_to_json(B)}


def lattice_from_json(data):
    _check_schema(data)
    if "B" not in data:
        raise ValueError("lattice payload is missing 'B'")
    return int_matrix_from_json(data["B"])


@dataclass(frozen=True)
class GroupData:
    """Parsed group description: integer generators plus word-level data."""

    generators: dict
    relations: tuple
    derived: dict
    signature: Signature | None
    skep: tuple | None

    def assignments(self) -> dict:
        """Generator matrices plus derived names, evaluated in file order."""
        out = dict(self.generators)
        for name, word in self.derived.items():
            out[name] = evaluate_word(word, out)
        return out


def group_from_json(data) -> GroupData:
    _check_schema(data)
    if not isinstance(data, dict) or "generators" not in data:
        raise ValueError("group payload is missing 'generators'")
    gens = data["generators"]
    if not isinstance(gens, dict) or not gens:
        raise ValueError("'generators' must be a non-empty name -> matrix map")
    generators = {name: int_matrix_from_json(m) for name, m in gens.items()}
    relations = tuple(_word_list(data.get("relations", []), "relations"))
    derived = data.get("derived", {})
    if not isinstance(derived, dict):
        raise ValueError("'derived' must map names to words")
    derived = {str(k): str(v) for k, v in derived.items()}
    signature = None
    if "signature" in data:
        sig = data["signature"]
        _expect_keys(sig, ("orbit_genus", "periods"), "signature")
        signature = Signature(sig["orbit_genus"], tuple(sig["periods"]))
    skep = None
    if "skep" in data:
        skep = tuple(_word_list(data["skep"], "skep"))
    return GroupData(generators, relations, derived, signature, skep)


def read_payload(path) -> dict:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ValueError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(payload, dict):
        raise ValueError(f"{path}: top level must be an object")
    return payload


def write_payload(path, payload: dict) -> None:
    Path(path).write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def fixtures_dir() -> Path:
    """Bundled data directory, overridable via JACDEC_FIXTURES."""
    override = os.environ.get("JACDEC_FIXTURES")
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "fixtures"


def load_fixture(name: str) -> dict:
    path = fixtures_dir() / name
    if not path.exists():
        raise ValueError(f"fixture {name} not found under {fixtures_dir()}")
    payload = read_payload(path)
    _check_schema(payload, required=True)
    return payload


def _check_schema(data, required: bool = False) -> None:
    if not isinstance(data, dict):
        raise ValueError("payload must be a JSON object")
    if "schema_version" in data:
        if data["schema_version"] != SCHEMA_VERSION:
            raise ValueError(
                f"unsupported schema_version {data['schema_version']!r}"
            )
    elif required:
        raise ValueError("payload is missing 'schema_version'")


def _expect_keys(data, keys, what: str) -> None:
    if not isinstance(data, dict):
        raise ValueError(f"{what} payload must be an object, got {data!r}")
    missing = [k for k in keys if k not in data]
    if missing:
        raise ValueError(f"{what} payload is missing {', '.join(missing)}")


def _word_list(data, what: str):
    if not isinstance(data, list):
        raise ValueError(f"'{what}' must be a list of words")
    return [str(w) for w in data]
