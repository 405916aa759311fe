"""Matrix file format and analysis report documents.

A matrix file is a single JSON object with real and imaginary parts
stored separately, which keeps the format free of complex-literal
parsing ambiguity:

    {"schema": 1, "n_qubits": 3, "re": [[...]], "im": [[...]], "tol": 1e-9}

"im" may be omitted for real matrices; "tol" is optional and records the
validation tolerance the producer used.  Floats are serialized as
shortest round-trip decimals, so parsing an emitted document reproduces
every numeric field exactly.
"""

from __future__ import annotations

import json

import numpy as np

from .linalg import hermiticity_deviation, hermitian_eigenvalues_stack
from .separability import WitnessReport

__all__ = [
    "SCHEMA_VERSION",
    "ParseError",
    "matrix_document",
    "dumps_matrix",
    "parse_matrix_document",
    "loads_matrix",
    "load_matrix_file",
    "density_diagnostics",
    "witness_document",
    "render_witness_human",
    "sweep_document",
    "render_sweep_human",
]

SCHEMA_VERSION = 1


class ParseError(ValueError):
    """Matrix file is malformed; the message states where."""


def matrix_document(mat, n_qubits: int, tol: float | None = None) -> dict:
    """JSON-ready dict for a matrix in the re/im file format."""
    m = np.asarray(mat, dtype=complex)
    doc = {
        "schema": SCHEMA_VERSION,
        "n_qubits": int(n_qubits),
        "re": m.real.tolist(),
        "im": m.imag.tolist(),
    }
    if tol is not None:
        doc["tol"] = float(tol)
    return doc


def dumps_matrix(mat, n_qubits: int, tol: float | None = None) -> str:
    return json.dumps(matrix_document(mat, n_qubits, tol), indent=1)


def _as_real_array(rows, name: str, dim: int) -> np.ndarray:
    try:
        arr = np.asarray(rows, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"field {name!r} is not a numeric array: {exc}") from exc
    if arr.shape != (dim, dim):
        raise ParseError(f"field {name!r} has shape {arr.shape}, expected ({dim}, {dim})")
    if not np.isfinite(arr).all():
        bad = np.argwhere(~np.isfinite(arr))[0]
        raise ParseError(f"field {name!r} has a non-finite entry at row {bad[0]}, column {bad[1]}")
    return arr


def parse_matrix_document(doc) -> tuple[np.ndarray, int, float | None]:
    """Validate a parsed JSON object; returns (matrix, n_qubits, tol-or-None)."""
    if not isinstance(doc, dict):
        raise ParseError(f"matrix document must be a JSON object, got {type(doc).__name__}")
    if "n_qubits" not in doc:
        raise ParseError("missing required field 'n_qubits'")
    n = doc["n_qubits"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"'n_qubits' must be a positive integer, got {n!r}")
    dim = 2 ** n
    if "re" not in doc:
        raise ParseError("missing required field 're'")
    re = _as_real_array(doc["re"], "re", dim)
    im = _as_real_array(doc["im"], "im", dim) if "im" in doc else np.zeros((dim, dim))
    tol = doc.get("tol")
    if tol is not None and not isinstance(tol, (int, float)):
        raise ParseError(f"'tol' must be a number, got {tol!r}")
    return re + 1j * im, n, None if tol is None else float(tol)


def loads_matrix(text: str) -> tuple[np.ndarray, int, float | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return parse_matrix_document(doc)


def load_matrix_file(path) -> tuple[np.ndarray, int, float | None]:
    with open(path, "r", encoding="utf-8") as fh:
        return loads_matrix(fh.read())


def density_diagnostics(mat) -> dict:
    """Measured deviations from the density-matrix invariants."""
    m = np.asarray(mat, dtype=complex)
    return {
        "hermiticity_deviation": float(hermiticity_deviation(m)),
        "trace_deviation": float(abs(complex(np.trace(m)) - 1.0)),
        "min_eigenvalue": float(hermitian_eigenvalues_stack(m[None, :, :])[0, 0]),
    }


def witness_document(report: WitnessReport, *, n_qubits: int, tolerance: float,
                     source: str, digest: str, validated: bool,
                     diagnostics: dict, version: str) -> dict:
    """Machine-readable witness report; all numeric fields round-trip."""
    return {
        "schema": SCHEMA_VERSION,
        "tool": "entcheck",
        "version": version,
        "kind": "witness-report",
        "source": source,
        "sha256": digest,
        "n_qubits": n_qubits,
        "tolerance": tolerance,
        "validated": validated,
        "validation": diagnostics,
        "reductions": [
            {
                "label": v.label.text,
                "kind": v.label.kind.value,
                "min_pt_eigenvalue": v.min_pt_eigenvalue,
                "separable": v.separable,
            }
            for v in report.verdicts
        ],
        "conclusion": report.conclusion,
        "culprit": None if report.culprit is None else report.culprit.text,
    }


def render_witness_human(doc: dict) -> str:
    lines = [
        f"entcheck {doc['version']} - reduction witness report",
        f"input: {doc['source']} (sha256 {doc['sha256'][:16]}...)",
        f"qubits: {doc['n_qubits']}   tolerance: {doc['tolerance']:g}   reductions: {len(doc['reductions'])}",
        "validation: hermiticity dev {hermiticity_deviation:.2e}, trace dev {trace_deviation:.2e}, "
        "min eigenvalue {min_eigenvalue:+.2e}".format(**doc["validation"]),
    ]
    if not doc["validated"]:
        lines += [
            "",
            "*** WARNING: input validation was skipped (--no-validate). ***",
            "*** Verdicts below are meaningless if the input is not a   ***",
            "*** genuine density matrix.                                ***",
        ]
    lines += [
        "",
        f"{'label':<8} {'kind':<14} {'min PT eigenvalue':>20}   verdict",
    ]
    for row in doc["reductions"]:
        verdict = "separable" if row["separable"] else "ENTANGLED"
        lines.append(
            f"{row['label']:<8} {row['kind']:<14} {row['min_pt_eigenvalue']:>+20.12e}   {verdict}"
        )
    lines.append("")
    if doc["conclusion"] == "ENTANGLED":
        lines.append(f"conclusion: ENTANGLED (worst reduction: {doc['culprit']})")
    else:
        lines.append("conclusion: INCONCLUSIVE (all reductions PPT; this does not certify separability)")
    return "\n".join(lines)


def sweep_document(family: str, rows: list[tuple[float, float, str]],
                   threshold: float | None, bracket: tuple[float, float] | None,
                   tolerance: float, version: str) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "tool": "entcheck",
        "version": version,
        "kind": "sweep-report",
        "family": family,
        "tolerance": tolerance,
        "rows": [
            {"parameter": p, "min_pt_eigenvalue": e, "conclusion": c}
            for p, e, c in rows
        ],
        "threshold": threshold,
        "bracket": None if bracket is None else list(bracket),
    }


def render_sweep_human(doc: dict) -> str:
    lines = [
        f"entcheck {doc['version']} - parameter sweep ({doc['family']} family)",
        f"tolerance: {doc['tolerance']:g}",
        "",
        f"{'parameter':>12} {'min PT eigenvalue':>20}   conclusion",
    ]
    for row in doc["rows"]:
        lines.append(
            f"{row['parameter']:>12.6f} {row['min_pt_eigenvalue']:>+20.12e}   {row['conclusion']}"
        )
    lines.append("")
    if doc["threshold"] is None:
        lines.append("threshold: none found in the sweep range")
    else:
        a, b = doc["bracket"]
        lines.append(f"threshold: {doc['threshold']:.6f} (bisection bracket [{a:.7f}, {b:.7f}])")
    return "\n".join(lines)
