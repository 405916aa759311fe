"""Dense complex linear algebra for few-qubit density matrices.

Everything operates on plain numpy arrays in the computational basis.
The composite index convention is big-endian: qubit 0 is the most
significant bit, so the three-qubit basis state |i j k> sits at
row 4*i + 2*j + k.  Every entrywise formula in this package is written
against that single convention.

Matrices here are at most 16x16; eigenvalues come from LAPACK's
two-sided Hermitian solver (the test suite cross-checks it against an
independent cyclic-Jacobi implementation and against hand-computed
spectra).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

__all__ = [
    "DEFAULT_TOL",
    "RANK_TOL",
    "NonFiniteError",
    "BadSubsetError",
    "NotNormalizedError",
    "ValidationError",
    "NotHermitianError",
    "TraceNotOneError",
    "NotPSDError",
    "DensityMatrix",
    "hermiticity_deviation",
    "hermitian_eigenvalues",
    "hermitian_eigenvalues_stack",
    "kron",
    "partial_trace",
    "validate_density",
    "matrix_rank",
    "check_unit_norm",
    "pure_density",
]

DEFAULT_TOL = 1e-9   # validation tolerance; inputs are exact constructions or ~1e-15 file noise
RANK_TOL = 1e-10     # relative singular-value cutoff for numerical rank


class NonFiniteError(ValueError):
    """Matrix or vector contains NaN or infinite entries."""


class BadSubsetError(ValueError):
    """Partial-trace subset is empty, repeats parties, or is not a strict subset."""


class NotNormalizedError(ValueError):
    """State-vector norm differs from 1 by more than the tolerance."""

    def __init__(self, deviation: float):
        super().__init__(f"state vector is not normalized: |sum|c|^2 - 1| = {deviation:.3e}")
        self.deviation = deviation


class ValidationError(ValueError):
    """A density-matrix invariant failed; subclasses carry the measured violation."""


class NotHermitianError(ValidationError):
    def __init__(self, deviation: float):
        super().__init__(f"not Hermitian: max |M - M^dag| = {deviation:.3e}")
        self.deviation = deviation


class TraceNotOneError(ValidationError):
    def __init__(self, deviation: float):
        super().__init__(f"trace differs from 1 by {deviation:.3e}")
        self.deviation = deviation


class NotPSDError(ValidationError):
    def __init__(self, min_eigenvalue: float):
        super().__init__(f"not positive semidefinite: min eigenvalue = {min_eigenvalue:.3e}")
        self.min_eigenvalue = min_eigenvalue


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated n-qubit state.

    Construct through :func:`validate_density` (or a state constructor);
    the dataclass itself does not re-check the invariants.  The stored
    array is an immutable copy.
    """

    mat: np.ndarray
    n_qubits: int
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        m = np.array(self.mat, dtype=complex)
        m.setflags(write=False)
        object.__setattr__(self, "mat", m)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]


def _as_matrix(mat) -> np.ndarray:
    m = np.asarray(mat, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise NonFiniteError("matrix contains NaN or infinite entries")
    return m


def hermiticity_deviation(mat: np.ndarray) -> float:
    """max |M[a,b] - conj(M[b,a])| over all entries."""
    return float(np.max(np.abs(mat - mat.conj().T)))


def hermitian_eigenvalues_stack(stack: np.ndarray) -> np.ndarray:
    """Eigenvalues of a stack of Hermitian matrices, shape (k, n, n) -> (k, n).

    No Hermiticity check; each matrix is symmetrized first so callers may
    pass arrays with roundoff-level asymmetry.  Ascending per matrix.
    """
    a = np.asarray(stack, dtype=complex)
    if a.ndim != 3 or a.shape[1] != a.shape[2]:
        raise ValueError(f"expected a (k, n, n) stack, got shape {a.shape}")
    h = (a + np.conj(np.transpose(a, (0, 2, 1)))) / 2.0
    return np.linalg.eigvalsh(h)


def hermitian_eigenvalues(mat, tol: float = DEFAULT_TOL) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, sorted ascending.

    Raises NotHermitianError if the matrix deviates from Hermiticity by
    more than ``tol``, NonFiniteError on NaN/Inf entries.
    """
    m = _as_matrix(mat)
    dev = hermiticity_deviation(m)
    if dev > tol:
        raise NotHermitianError(dev)
    return hermitian_eigenvalues_stack(m[None, :, :])[0]


def kron(a, b) -> np.ndarray:
    """Kronecker product: entry [(i*dB+j), (r*dB+s)] = A[i,r] * B[j,s]."""
    return np.kron(_as_matrix(a), _as_matrix(b))


def partial_trace(rho: DensityMatrix, keep: Sequence[int]) -> DensityMatrix:
    """Trace out every party not listed in ``keep``.

    ``keep`` is an ordered subset of ``range(rho.n_qubits)``; the result
    carries the kept parties in the order given.
    """
    kept = tuple(int(q) for q in keep)
    n = rho.n_qubits
    if not kept:
        raise BadSubsetError("keep must be nonempty")
    if len(set(kept)) != len(kept):
        raise BadSubsetError(f"keep repeats parties: {kept}")
    if any(q < 0 or q >= n for q in kept):
        raise BadSubsetError(f"keep {kept} outside parties 0..{n - 1}")
    if len(kept) >= n:
        raise BadSubsetError("keep must be a strict subset of the parties")

    t = rho.mat.reshape((2,) * (2 * n))
    # einsum integer subscripts: traced parties share one index on ket and bra
    in_sub = list(range(n)) + [q + n if q in kept else q for q in range(n)]
    out_sub = [q for q in kept] + [q + n for q in kept]
    reduced = np.einsum(t, in_sub, out_sub)
    d = 2 ** len(kept)
    return DensityMatrix(reduced.reshape(d, d), len(kept), rho.tol)


def validate_density(mat, n_qubits: int | None = None, tol: float = DEFAULT_TOL) -> DensityMatrix:
    """Check Hermiticity, unit trace and positive semidefiniteness.

    Returns the validated :class:`DensityMatrix` or raises the specific
    :class:`ValidationError` subclass carrying the measured violation.
    ``n_qubits`` is inferred from the dimension when omitted.
    """
    m = _as_matrix(mat)
    dim = m.shape[0]
    inferred = dim.bit_length() - 1
    if dim <= 0 or 2 ** inferred != dim:
        raise ValueError(f"dimension {dim} is not a power of 2")
    if n_qubits is None:
        n_qubits = inferred
    elif 2 ** n_qubits != dim:
        raise ValueError(f"dimension {dim} does not match n_qubits={n_qubits}")

    dev = hermiticity_deviation(m)
    if dev > tol:
        raise NotHermitianError(dev)
    trace_dev = abs(complex(np.trace(m)) - 1.0)
    if trace_dev > tol:
        raise TraceNotOneError(trace_dev)
    min_eig = float(hermitian_eigenvalues_stack(m[None, :, :])[0, 0])
    if min_eig < -tol:
        raise NotPSDError(min_eig)
    return DensityMatrix(m, n_qubits, tol)


def matrix_rank(mat, tol: float = RANK_TOL) -> int:
    """Numerical rank: singular values above ``tol`` times the largest.

    Accepts rectangular matrices (the pure-state coefficient matrices
    are 2x4).
    """
    m = np.asarray(mat, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise NonFiniteError("matrix contains NaN or infinite entries")
    s = np.linalg.svd(m, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol * s[0]))


def check_unit_norm(vec, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Return the coefficient vector as a flat complex array, checking unit norm."""
    v = np.asarray(vec, dtype=complex).reshape(-1)
    if not np.isfinite(v).all():
        raise NonFiniteError("state vector contains NaN or infinite entries")
    dev = abs(float(np.sum(np.abs(v) ** 2)) - 1.0)
    if dev > tol:
        raise NotNormalizedError(dev)
    return v


def pure_density(coeffs, tol: float = DEFAULT_TOL) -> DensityMatrix:
    """Rank-1 density matrix |psi><psi| of a normalized coefficient vector."""
    v = check_unit_norm(coeffs, tol)
    n = v.size.bit_length() - 1
    if 2 ** n != v.size:
        raise ValueError(f"coefficient length {v.size} is not a power of 2")
    return DensityMatrix(np.outer(v, v.conj()), n, tol)
