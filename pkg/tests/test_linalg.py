"""Tests for the linear-algebra substrate."""

import numpy as np
import pytest

from entcheck import (
    BadSubsetError,
    NonFiniteError,
    NotHermitianError,
    NotNormalizedError,
    NotPSDError,
    TraceNotOneError,
    check_unit_norm,
    ghz,
    hermitian_eigenvalues,
    kron,
    matrix_rank,
    maximally_mixed,
    partial_trace,
    product_pure,
    pure_density,
    validate_density,
)
from entcheck.separability import partial_transpose

from util import (
    bell_matrix,
    ginibre_density,
    jacobi_eigenvalues_oracle,
    ptrace_loops,
    random_density,
    random_single_qubit_density,
)


class TestHermitianEigenvalues:
    def test_identity(self):
        assert np.allclose(hermitian_eigenvalues(np.eye(2)), [1.0, 1.0])

    def test_pauli_x(self):
        assert np.allclose(hermitian_eigenvalues([[0, 1], [1, 0]]), [-1.0, 1.0])

    def test_bell_partial_transpose_spectrum(self):
        # brute-force characteristic polynomial of PT(Bell) gives a single
        # -1/2 root and a triple +1/2 root
        eigs = hermitian_eigenvalues(partial_transpose(bell_matrix(), "Y"))
        assert np.allclose(eigs, [-0.5, 0.5, 0.5, 0.5], atol=1e-12)

    @pytest.mark.parametrize("n", [2, 3, 4, 8, 16])
    def test_matches_jacobi_oracle(self, n):
        rng = np.random.default_rng(100 + n)
        for _ in range(5):
            g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            h = (g + g.conj().T) / 2
            assert np.allclose(
                hermitian_eigenvalues(h, tol=1e-8),
                jacobi_eigenvalues_oracle(h),
                atol=1e-10,
            )

    def test_eigenvalue_sum_equals_trace(self):
        rng = np.random.default_rng(7)
        for _ in range(25):
            g = rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8))
            h = (g + g.conj().T) / 2
            eigs = hermitian_eigenvalues(h, tol=1e-8)
            assert abs(np.sum(eigs) - np.trace(h).real) < 1e-9

    def test_shift_moves_spectrum(self):
        rng = np.random.default_rng(8)
        g = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        h = (g + g.conj().T) / 2
        shift = 3.75
        base = hermitian_eigenvalues(h, tol=1e-8)
        shifted = hermitian_eigenvalues(h + shift * np.eye(6), tol=1e-8)
        assert np.allclose(shifted, base + shift, atol=1e-9)

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitianError) as exc:
            hermitian_eigenvalues([[0, 1], [0, 0]])
        assert exc.value.deviation == pytest.approx(1.0)

    def test_rejects_non_finite(self):
        with pytest.raises(NonFiniteError):
            hermitian_eigenvalues([[np.nan, 0], [0, 1]])


class TestKron:
    def test_identity(self):
        assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_projectors(self):
        assert np.array_equal(
            kron(np.diag([1.0, 0.0]), np.diag([1.0, 0.0])), np.diag([1.0, 0, 0, 0])
        )

    def test_bell_block_sits_in_upper_left(self):
        # |0><0| (x) Bell occupies the A=0 sector of the 8x8 matrix
        out = kron(np.diag([1.0, 0.0]), bell_matrix())
        expected = np.zeros((8, 8), dtype=complex)
        expected[:4, :4] = bell_matrix()
        assert np.array_equal(out, expected)

    def test_entry_formula(self):
        rng = np.random.default_rng(9)
        a = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        b = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        out = kron(a, b)
        for i in range(2):
            for r in range(2):
                for j in range(4):
                    for s in range(4):
                        # vectorized complex multiply may differ by one ulp
                        assert abs(out[4 * i + j, 4 * r + s] - a[i, r] * b[j, s]) < 1e-14

    def test_trace_multiplicative(self):
        rng = np.random.default_rng(10)
        for _ in range(10):
            a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
            b = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
            assert abs(np.trace(kron(a, b)) - np.trace(a) * np.trace(b)) < 1e-12


class TestPartialTrace:
    def test_ghz_pair(self):
        out = partial_trace(ghz(), (0, 1))
        assert np.allclose(out.mat, np.diag([0.5, 0, 0, 0.5]), atol=1e-15)

    def test_product_factorization(self):
        rng = np.random.default_rng(11)
        parts = [random_single_qubit_density(rng) for _ in range(3)]
        rho = validate_density(kron(kron(parts[0], parts[1]), parts[2]), 3)
        out = partial_trace(rho, (0, 2))
        assert np.allclose(out.mat, kron(parts[0], parts[2]), atol=1e-13)

    def test_keep_order_is_respected(self):
        rng = np.random.default_rng(12)
        parts = [random_single_qubit_density(rng) for _ in range(3)]
        rho = validate_density(kron(kron(parts[0], parts[1]), parts[2]), 3)
        out = partial_trace(rho, (2, 0))
        assert np.allclose(out.mat, kron(parts[2], parts[0]), atol=1e-13)

    def test_maximally_mixed(self):
        out = partial_trace(maximally_mixed(3), (1,))
        assert np.allclose(out.mat, np.eye(2) / 2, atol=1e-15)

    @pytest.mark.parametrize("keep", [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2)])
    def test_matches_loop_oracle(self, keep):
        rng = np.random.default_rng(sum(keep) + 13)
        rho = random_density(rng, 3)
        out = partial_trace(rho, keep)
        assert np.allclose(out.mat, ptrace_loops(rho.mat, keep, 3), atol=1e-13)

    def test_composition(self):
        rng = np.random.default_rng(14)
        rho = random_density(rng, 3)
        via_two_steps = partial_trace(partial_trace(rho, (0, 1)), (0,))
        direct = partial_trace(rho, (0,))
        assert np.allclose(via_two_steps.mat, direct.mat, atol=1e-12)

    def test_output_is_valid_density(self):
        rng = np.random.default_rng(15)
        for _ in range(20):
            rho = ginibre_density(rng, 3)
            out = partial_trace(rho, (0, 2))
            validate_density(out.mat, 2)  # raises on violation
            assert abs(np.trace(out.mat) - 1) < 1e-12

    def test_bad_subsets(self):
        rho = maximally_mixed(3)
        with pytest.raises(BadSubsetError):
            partial_trace(rho, ())
        with pytest.raises(BadSubsetError):
            partial_trace(rho, (0, 0))
        with pytest.raises(BadSubsetError):
            partial_trace(rho, (0, 1, 2))
        with pytest.raises(BadSubsetError):
            partial_trace(rho, (3,))


class TestValidateDensity:
    def test_accepts_maximally_mixed(self):
        dm = validate_density(np.eye(4) / 4)
        assert dm.n_qubits == 2

    def test_trace_violation_magnitude(self):
        with pytest.raises(TraceNotOneError) as exc:
            validate_density(np.diag([1.0, 0.0, 0.0, 0.1]))
        assert exc.value.deviation == pytest.approx(0.1)

    def test_psd_violation_magnitude(self):
        with pytest.raises(NotPSDError) as exc:
            validate_density(np.diag([1.5, -0.5]))
        assert exc.value.min_eigenvalue == pytest.approx(-0.5)

    def test_hermiticity_violation(self):
        m = np.eye(4) / 4
        m[0, 1] = 0.2
        with pytest.raises(NotHermitianError) as exc:
            validate_density(m)
        assert exc.value.deviation == pytest.approx(0.2)

    def test_wrong_n_qubits(self):
        with pytest.raises(ValueError):
            validate_density(np.eye(4) / 4, n_qubits=3)

    def test_matrix_is_immutable(self):
        dm = validate_density(np.eye(4) / 4)
        with pytest.raises(ValueError):
            dm.mat[0, 0] = 5.0


class TestMatrixRank:
    def test_zero_matrix(self):
        assert matrix_rank(np.zeros((2, 4))) == 0

    def test_ghz_coefficient_matrix(self):
        m = np.array([[2 ** -0.5, 0, 0, 0], [0, 0, 0, 2 ** -0.5]])
        assert matrix_rank(m) == 2

    def test_product_coefficients_rank_one(self):
        rng = np.random.default_rng(16)
        row = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        m = np.outer(rng.standard_normal(2) + 1j * rng.standard_normal(2), row)
        assert matrix_rank(m) == 1

    def test_non_finite(self):
        with pytest.raises(NonFiniteError):
            matrix_rank(np.array([[np.inf, 0.0], [0.0, 1.0]]))


class TestStateVectors:
    def test_norm_check(self):
        with pytest.raises(NotNormalizedError) as exc:
            check_unit_norm([1.0, 1.0])
        assert exc.value.deviation == pytest.approx(1.0)

    def test_pure_density_is_projector(self):
        v = np.zeros(8)
        v[0] = v[7] = 2 ** -0.5
        dm = pure_density(v)
        assert np.allclose(dm.mat @ dm.mat, dm.mat, atol=1e-14)
        assert dm.n_qubits == 3

    def test_product_pure_matches_kron(self):
        dm = product_pure([1, 0], [1, 0], [1, 0])
        expected = np.zeros((8, 8))
        expected[0, 0] = 1.0
        assert np.allclose(dm.mat, expected, atol=1e-15)
