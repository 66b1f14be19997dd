"""JSON manifold documents: loading, validation and canonical saving."""

from __future__ import annotations

import json
import re
import warnings
from importlib import resources
from pathlib import Path

import jsonschema

from .lie import LieStructure
from .parser import ParseError, parse_scalar
from .polynomial import Polynomial
from .structure import NordenManifold, check_norden
from .tensor import MetricMatrix, SingularMetricError, Tensor

BUNDLED = ("abelian", "paper_family_symbolic", "identity_metric")


class DocumentError(ValueError):
    """Malformed manifold document (schema, scalar text or shape)."""


class NordenViolationWarning(UserWarning):
    pass


def _schema(name: str) -> dict:
    return json.loads(resources.files("norden.data").joinpath(name).read_text())


def manifold_schema() -> dict:
    return _schema("manifold.schema.json")


def bundled_path(name: str):
    if name not in BUNDLED:
        raise DocumentError(f"no bundled example named {name!r}; choose from {', '.join(BUNDLED)}")
    return resources.files("norden.data").joinpath(f"{name}.json")


def _scalar(value, where: str) -> Polynomial:
    text = str(value)
    try:
        return parse_scalar(text)
    except ParseError as exc:
        raise DocumentError(f"{where}: {exc}") from exc


def _matrix(rows, dim: int, field: str) -> Tensor:
    if len(rows) != dim or any(len(r) != dim for r in rows):
        raise DocumentError(f"{field} must be a {dim}x{dim} matrix")
    return Tensor.from_nested(
        [[_scalar(v, f"{field}[{i}][{j}]") for j, v in enumerate(row, 1)] for i, row in enumerate(rows, 1)]
    )


def manifold_from_document(doc: dict) -> NordenManifold:
    try:
        jsonschema.validate(doc, manifold_schema())
    except jsonschema.ValidationError as exc:
        loc = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise DocumentError(f"schema violation at {loc}: {exc.message}") from None
    dim = doc["dim"]
    if "basis" in doc and len(doc["basis"]) != dim:
        raise DocumentError(f"basis has {len(doc['basis'])} names but dim is {dim}")
    brackets: dict[tuple[int, int], list[Polynomial]] = {}
    for n, entry in enumerate(doc["structure_constants"]):
        i, j, k = entry["i"], entry["j"], entry["k"]
        if not (i < j <= dim and k <= dim):
            raise DocumentError(
                f"structure_constants[{n}]: need 1 <= i < j <= {dim} and k <= {dim}, got ({i}, {j}, {k})"
            )
        coords = brackets.setdefault((i, j), [Polynomial.constant(0)] * dim)
        if coords[k - 1]:
            raise DocumentError(f"structure_constants[{n}]: duplicate entry for ({i}, {j}, {k})")
        coords[k - 1] = _scalar(entry["value"], f"structure_constants[{n}].value")
    L = LieStructure.from_brackets(dim, brackets)
    g_raw = _matrix(doc["metric"], dim, "metric")
    try:
        g = MetricMatrix(g_raw)
    except (ValueError, SingularMetricError) as exc:
        raise DocumentError(f"metric: {exc}") from None
    J = _matrix(doc["J"], dim, "J")
    M = NordenManifold(L, g, J)
    report = check_norden(M)
    if not report.ok:
        kinds = sorted({v[0] for v in report.violations})
        warnings.warn(
            f"structure is not a Norden structure ({'; '.join(kinds)} violated)",
            NordenViolationWarning,
            stacklevel=2,
        )
    return M


def load_manifold(path) -> NordenManifold:
    """Read and validate a manifold document; Norden violations only warn."""
    text = Path(path).read_text() if not hasattr(path, "read_text") else path.read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from None
    return manifold_from_document(doc)


def manifold_to_document(M: NordenManifold, name: str | None = None) -> dict:
    n = M.dim
    doc: dict = {"schema": 1}
    if name:
        doc["name"] = name
    doc["dim"] = n
    doc["basis"] = [f"X{i}" for i in range(1, n + 1)]
    doc["structure_constants"] = [
        {"i": i, "j": j, "k": k, "value": str(M.L.C[i, j, k])}
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        for k in range(1, n + 1)
        if M.L.C[i, j, k]
    ]
    doc["metric"] = [[str(M.g.g[i, j]) for j in range(1, n + 1)] for i in range(1, n + 1)]
    doc["J"] = [[str(M.J[i, j]) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return doc


def dumps_document(doc: dict) -> str:
    text = json.dumps(doc, indent=2)
    # keep flat lists and flat objects (matrix rows, bracket entries) on one line
    for pattern, open_, close in ((r"\[\s+([^\[\]{}]*?)\s+\]", "[", "]"), (r"\{\s+([^\[\]{}]*?)\s+\}", "{", "}")):
        text = re.sub(
            pattern,
            lambda m: open_ + ", ".join(x.strip() for x in m.group(1).split(",")) + close,
            text,
        )
    return text + "\n"


def save_manifold(M: NordenManifold, path, name: str | None = None) -> None:
    Path(path).write_text(dumps_document(manifold_to_document(M, name)))
