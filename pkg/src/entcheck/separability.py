"""Partial transposition, the exact 2x2 PPT decision, reduction-set
entanglement witnesses, and exact separability for three-qubit pure states.

For a pair of qubits, positivity of the partial transpose is necessary
and sufficient for separability, so each 4x4 reduction gets an exact
verdict.  The witness over a reduction set is one-sided for mixed
states: a failed reduction certifies entanglement of the full state,
while an all-clear is INCONCLUSIVE, never a separability certificate.
For pure three-qubit states the decision is exact and is implemented
directly on the coefficient vector through 2x4 rank tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    RANK_TOL,
    DensityMatrix,
    check_unit_norm,
    hermitian_eigenvalues_stack,
)
from .reductions import (
    ReductionLabel,
    WrongArityError,
    reduce_all_quadripartite,
    reduce_all_tripartite,
)

__all__ = [
    "ENTANGLED",
    "INCONCLUSIVE",
    "WrongDimError",
    "PptVerdict",
    "WitnessReport",
    "SplitVerdict",
    "PURE_SPLITS",
    "partial_transpose",
    "ppt_separable",
    "witness_tripartite",
    "witness_quadripartite",
    "witness",
    "split_coefficient_matrix",
    "pure_split_separable",
    "pure_fully_separable",
    "necessary_condition_holds",
]

ENTANGLED = "ENTANGLED"
INCONCLUSIVE = "INCONCLUSIVE"

PURE_SPLITS = ("A-BC", "B-CA", "C-AB")


class WrongDimError(ValueError):
    """Matrix dimension does not match the operation (4x4 expected)."""


@dataclass(frozen=True)
class PptVerdict:
    """PPT decision for one 4x4 reduction; exact for a qubit pair."""

    label: ReductionLabel | None
    min_pt_eigenvalue: float
    separable: bool
    tolerance_used: float


@dataclass(frozen=True)
class WitnessReport:
    """Verdicts for every reduction plus the overall conclusion.

    ``conclusion`` is ENTANGLED iff at least one reduction fails PPT;
    ``culprit`` is then the label with the most negative PT eigenvalue.
    INCONCLUSIVE never means separable.
    """

    verdicts: tuple[PptVerdict, ...]
    conclusion: str
    culprit: ReductionLabel | None

    @property
    def entangled(self) -> bool:
        return self.conclusion == ENTANGLED

    @property
    def min_pt_eigenvalue(self) -> float:
        return min(v.min_pt_eigenvalue for v in self.verdicts)


@dataclass(frozen=True)
class SplitVerdict:
    """Exact pure-state separability across one one-vs-two split."""

    split: str
    separable: bool
    max_minor_modulus: float


def partial_transpose(sigma, side: str = "Y") -> np.ndarray:
    """Partial transpose of a 4x4 two-qubit matrix.

    side="Y" transposes the second qubit: out[mn,rs] = in[ms,rn];
    side="X" the first: out[mn,rs] = in[rn,ms].  Involutive and
    trace/Hermiticity preserving; both sides have identical spectra.
    """
    m = np.asarray(sigma, dtype=complex)
    if m.shape != (4, 4):
        raise WrongDimError(f"partial transpose is defined on 4x4 matrices, got {m.shape}")
    t = m.reshape(2, 2, 2, 2)
    side = side.upper()
    if side == "Y":
        return t.transpose(0, 3, 2, 1).reshape(4, 4)
    if side == "X":
        return t.transpose(2, 1, 0, 3).reshape(4, 4)
    raise ValueError(f"side must be 'X' or 'Y', got {side!r}")


def ppt_separable(sigma: DensityMatrix, tol: float | None = None,
                  label: ReductionLabel | None = None) -> PptVerdict:
    """Exact separability of a validated two-qubit state via PPT.

    Only the Y-side transpose is diagonalized; the X-side spectrum is
    identical.  Eigenvalues down to -tol count as nonnegative, so
    boundary states classify as separable.
    """
    if sigma.dim != 4:
        raise WrongDimError(f"PPT decision is defined on 4x4 states, got dim {sigma.dim}")
    if tol is None:
        tol = sigma.tol
    pt = partial_transpose(sigma.mat, "Y")
    min_eig = float(hermitian_eigenvalues_stack(pt[None, :, :])[0, 0])
    return PptVerdict(label, min_eig, min_eig >= -tol, tol)


def _witness_over(entries: dict[ReductionLabel, DensityMatrix], tol: float) -> WitnessReport:
    labels = list(entries)
    pts = np.stack([partial_transpose(entries[l].mat, "Y") for l in labels])
    min_eigs = hermitian_eigenvalues_stack(pts)[:, 0]
    verdicts = tuple(
        PptVerdict(label, float(e), bool(e >= -tol), tol)
        for label, e in zip(labels, min_eigs)
    )
    worst = int(np.argmin(min_eigs))
    if min_eigs[worst] < -tol:
        return WitnessReport(verdicts, ENTANGLED, labels[worst])
    return WitnessReport(verdicts, INCONCLUSIVE, None)


def witness_tripartite(rho: DensityMatrix, tol: float | None = None,
                       validate_reductions: bool = True) -> WitnessReport:
    """Entanglement witness over the 6 reductions of a three-qubit state."""
    if rho.n_qubits != 3:
        raise WrongArityError(f"witness_tripartite needs 3 qubits, got {rho.n_qubits}")
    if tol is None:
        tol = rho.tol
    return _witness_over(reduce_all_tripartite(rho, validate=validate_reductions), tol)


def witness_quadripartite(rho: DensityMatrix, tol: float | None = None,
                          validate_reductions: bool = True) -> WitnessReport:
    """Entanglement witness over the 25 reductions of a four-qubit state."""
    if rho.n_qubits != 4:
        raise WrongArityError(f"witness_quadripartite needs 4 qubits, got {rho.n_qubits}")
    if tol is None:
        tol = rho.tol
    return _witness_over(reduce_all_quadripartite(rho, validate=validate_reductions), tol)


def witness(rho: DensityMatrix, tol: float | None = None,
            validate_reductions: bool = True) -> WitnessReport:
    """Arity dispatch to the tripartite or quadripartite witness."""
    if rho.n_qubits == 3:
        return witness_tripartite(rho, tol, validate_reductions)
    if rho.n_qubits == 4:
        return witness_quadripartite(rho, tol, validate_reductions)
    raise WrongArityError(f"witness is defined for 3 or 4 qubits, not {rho.n_qubits}")


def split_coefficient_matrix(psi, split: str, tol: float = DEFAULT_TOL) -> np.ndarray:
    """2x4 coefficient matrix of a three-qubit pure state for one split.

    Rows are indexed by the kept qubit: A-BC rows are (c_0jk ; c_1jk),
    B-CA rows (c_i0k ; c_i1k) with columns ordered (i,k), C-AB rows
    (c_ij0 ; c_ij1) with columns ordered (i,j).
    """
    v = check_unit_norm(psi, tol)
    if v.size != 8:
        raise WrongDimError(f"expected 8 coefficients for three qubits, got {v.size}")
    t = v.reshape(2, 2, 2)
    if split == "A-BC":
        return t.reshape(2, 4)
    if split == "B-CA":
        return t.transpose(1, 0, 2).reshape(2, 4)
    if split == "C-AB":
        return t.transpose(2, 0, 1).reshape(2, 4)
    raise ValueError(f"split must be one of {PURE_SPLITS}, got {split!r}")


def pure_split_separable(psi, split: str, tol: float = RANK_TOL) -> SplitVerdict:
    """Exact split separability of a pure state via 2x2 minors.

    The state factors across the split iff the 2x4 coefficient matrix
    has rank < 2, i.e. every one of its six 2x2 minors vanishes.
    """
    m = split_coefficient_matrix(psi, split)
    max_minor = max(
        abs(m[0, i] * m[1, j] - m[0, j] * m[1, i])
        for i, j in combinations(range(4), 2)
    )
    return SplitVerdict(split, bool(max_minor <= tol), float(max_minor))


def pure_fully_separable(psi, tol: float = RANK_TOL) -> bool:
    """True iff a three-qubit pure state factors across all three splits,
    i.e. is a product of three single-qubit states."""
    return all(pure_split_separable(psi, split, tol).separable for split in PURE_SPLITS)


def necessary_condition_holds(rho: DensityMatrix, tol: float | None = None) -> bool:
    """True iff every reduction passes PPT.

    Required for separability, but not sufficient: a True result does not
    certify that a mixed state is separable (bound entangled states pass).
    """
    return not witness(rho, tol).entangled
