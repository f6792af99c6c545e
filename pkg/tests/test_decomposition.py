"""
Tests for the ensemble connection (HJW), unitary diagonalization,
purification and the explicit separable decomposition.
"""
import numpy as np
from django.test import SimpleTestCase
from parameterized import parameterized
from rest_framework import serializers

from locality.decomposition import (
    SeparableDecomposition,
    SeparableTerm,
    WeightedVector,
    build_separable_decomposition,
    hjw_connect,
    purify,
    unitary_diagonalize,
)
from locality.exceptions import InconsistentDecompositions, NotApplicable, UnsupportedDimension
from locality.search import WeakLocalityVerdict, basis_at, weak_locality_search
from locality.serializers import DecompositionDocumentSerializer, DecompositionSerializer, connection_report
from matcore.arrays import dagger, projector
from matcore.exceptions import DimensionMismatch, NotUnitary, ValidationFailed
from matcore.linalg import partial_trace, partial_trace_matrix
from matcore.operators import SIGMA_X
from matcore.states import DensityMatrix, PureState

from .factories import ProductStateFactory, decomposition_pair, random_amplitudes, random_density, random_unitary
from .test_config import test_config
from .utils import MatrixAssertionsMixin

HADAMARD = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
CLASSICAL = DensityMatrix(np.diag([0.5, 0, 0, 0.5]), (2, 2))
BELL = DensityMatrix(np.outer([1, 0, 0, 1], [1, 0, 0, 1]) / 2, (2, 2))


def weighted(*rows):
    return [WeightedVector(np.asarray(row, dtype=np.complex128)) for row in rows]


def stacked(vectors, length):
    stack = np.zeros((length, vectors[0].vector.size), dtype=np.complex128)
    stack[:len(vectors)] = [item.vector for item in vectors]
    return stack


def rotated_classical_state(seed, p):
    """p |a><a| (x) s1 + (1 - p) |a_perp><a_perp| (x) s2 for a random qubit ket a."""
    a = random_amplitudes(seed, 2)
    a_perp = np.array([-np.conj(a[1]), np.conj(a[0])])
    matrix = p * np.kron(projector(a), random_density(seed + 1, 2)) + (1 - p) * np.kron(
        projector(a_perp), random_density(seed + 2, 2)
    )
    return DensityMatrix(matrix, (2, 2))


class HjwConnectTest(MatrixAssertionsMixin, SimpleTestCase):
    """Unitary freedom between ensembles of one density matrix"""

    def test_identical_decompositions(self):
        """Test equal ensembles are connected by the identity"""
        ensemble = weighted([np.sqrt(0.6), 0], [0, np.sqrt(0.4)])
        self.assertMatrixAlmostEqual(hjw_connect(ensemble, ensemble), np.eye(2), 1e-9)

    def test_permutation(self):
        """Test reordered vectors give the swap"""
        first = weighted([np.sqrt(0.6), 0], [0, np.sqrt(0.4)])
        second = weighted([0, np.sqrt(0.4)], [np.sqrt(0.6), 0])
        self.assertMatrixAlmostEqual(hjw_connect(first, second), SIGMA_X, 1e-9)

    def test_hadamard(self):
        """Test the {|0>, |1>} and {|+>, |->} ensembles of I/2 differ by a Hadamard"""
        first = weighted([np.sqrt(0.5), 0], [0, np.sqrt(0.5)])
        second = weighted([0.5, 0.5], [0.5, -0.5])
        self.assertMatrixAlmostEqual(hjw_connect(first, second), HADAMARD, 1e-9)

    def test_random_pairs(self):
        """Test U0 maps one padded ensemble onto the other"""
        for seed in range(test_config.get_data_limit('random_decomposition_pairs')):
            first, second = decomposition_pair(seed)
            u0 = hjw_connect(first, second)
            self.assertUnitary(u0, test_config.get_tolerance('unitary'))
            self.assertMatrixAlmostEqual(
                u0 @ stacked(first, 4), stacked(second, 4), test_config.get_tolerance('hjw_map')
            )

    def test_shorter_ensemble_is_padded(self):
        """Test ensembles of different lengths are zero-padded"""
        first = weighted([1, 0])
        second = weighted([np.sqrt(0.5), 0], [np.sqrt(0.5), 0])
        u0 = hjw_connect(first, second)
        self.assertMatrixAlmostEqual(u0 @ stacked(first, 2), stacked(second, 2), 1e-9)

    @parameterized.expand([(1e-6,), (1e-8,), (1e-9,), (1e-10,)])
    def test_small_eigenvalue_is_kept(self, epsilon):
        """Test an eigenvalue at or below the tolerance still maps exactly"""
        for seed in range(20):
            stack = np.diag([np.sqrt(1 - epsilon), np.sqrt(epsilon)]) @ random_unitary(seed, 2).T
            first = weighted(*stack)
            second = weighted(*(random_unitary(seed + 100, 2) @ stack))
            u0 = hjw_connect(first, second)
            self.assertUnitary(u0, test_config.get_tolerance('unitary'))
            self.assertMatrixAlmostEqual(
                u0 @ stacked(first, 2), stacked(second, 2), test_config.get_tolerance('hjw_map')
            )

    def test_map_residual_is_checked(self):
        """Test a loose consistency tolerance cannot hide a failed map"""
        first = weighted([1, 0])
        second = weighted([np.sqrt(0.8), 0], [0, np.sqrt(0.2)])
        with self.assertRaises(InconsistentDecompositions):
            hjw_connect(first, second, tol=0.3)

    def test_different_states(self):
        """Test ensembles of different states are rejected"""
        with self.assertRaises(InconsistentDecompositions):
            hjw_connect(weighted([1, 0]), weighted([0, 1]))

    def test_different_dimensions(self):
        """Test ensembles in different spaces are rejected"""
        with self.assertRaises(DimensionMismatch):
            hjw_connect(weighted([1, 0]), weighted([1, 0, 0]))

    def test_vector_norm_bound(self):
        """Test weighted vectors longer than one are rejected"""
        with self.assertRaises(ValidationFailed):
            WeightedVector(np.array([1.0, 1.0]))


class UnitaryDiagonalizeTest(MatrixAssertionsMixin, SimpleTestCase):
    """Eigen-decomposition of unitaries with phase ordering"""

    def test_identity(self):
        """Test the identity is its own diagonal form with U = I"""
        u, lam = unitary_diagonalize(np.eye(3))
        self.assertMatrixAlmostEqual(u, np.eye(3))
        self.assertMatrixAlmostEqual(lam, np.eye(3))

    def test_sigma_x(self):
        """Test sigma_x diagonalizes to diag(1, -1) in the Hadamard basis"""
        u, lam = unitary_diagonalize(SIGMA_X)
        self.assertMatrixAlmostEqual(lam, np.diag([1, -1]), 1e-12)
        self.assertMatrixAlmostEqual(u, HADAMARD, 1e-12)

    def test_random_unitaries(self):
        """Test U U0 U^dag is diagonal and phases are ascending"""
        for seed in range(20):
            u0 = random_unitary(seed, 4)
            u, lam = unitary_diagonalize(u0)
            self.assertUnitary(u)
            self.assertMatrixAlmostEqual(u @ u0 @ dagger(u), lam, 1e-9)
            np.testing.assert_allclose(np.abs(np.diag(lam)), 1.0, atol=1e-9)
            phases = np.mod(np.angle(np.diag(lam)), 2 * np.pi)
            self.assertTrue(np.all(np.diff(phases) >= 0))

    def test_degenerate_cluster(self):
        """Test a degenerate unitary still gives an exact diagonal form"""
        v = random_unitary(5, 4)
        u0 = v @ np.diag([1, 1, 1j, -1]) @ dagger(v)
        u, lam = unitary_diagonalize(u0)
        self.assertMatrixAlmostEqual(np.diag(lam), [1, 1, 1j, -1], 1e-9)
        self.assertMatrixAlmostEqual(u @ u0 @ dagger(u), lam, 1e-9)

    def test_not_unitary(self):
        """Test non-unitary input is rejected"""
        with self.assertRaises(NotUnitary):
            unitary_diagonalize(np.array([[1, 1], [0, 1]]))


class PurifyTest(MatrixAssertionsMixin, SimpleTestCase):
    """Purification with an ancilla"""

    def test_full_rank(self):
        """Test tracing the ancilla recovers rho"""
        rho = DensityMatrix(random_density(3, 4), (2, 2))
        psi = purify(rho)
        self.assertEqual(psi.dims, (2, 2, 4))
        self.assertMatrixAlmostEqual(partial_trace_matrix(psi.density().matrix, (4, 4), 0), rho.matrix)

    def test_rank_deficient(self):
        """Test the ancilla dimension equals the rank"""
        rho = DensityMatrix(random_density(4, 3, rank=2))
        psi = purify(rho)
        self.assertEqual(psi.dims[-1], 2)
        coefficients = psi.amplitudes.reshape(3, 2)
        self.assertMatrixAlmostEqual(coefficients @ dagger(coefficients), rho.matrix)


class SeparableDecompositionTest(MatrixAssertionsMixin, SimpleTestCase):
    """Explicit product ensembles from a weak-locality basis"""

    def build(self, rho):
        verdict = weak_locality_search(rho, grid=test_config.get_grid('fast'))
        self.assertTrue(verdict.found)
        return build_separable_decomposition(rho, verdict)

    def assertReconstructs(self, decomposition, rho):
        self.assertAlmostEqual(sum(term.weight for term in decomposition.terms), 1.0, delta=1e-8)
        self.assertTrue(all(term.weight >= 0 for term in decomposition.terms))
        self.assertMatrixAlmostEqual(
            decomposition.reconstruct(), rho.matrix, test_config.get_tolerance('reconstruction')
        )

    def test_classical_state(self):
        """Test the classical state splits into |00> and |11> with weight 1/2"""
        decomposition = self.build(CLASSICAL)
        self.assertReconstructs(decomposition, CLASSICAL)
        self.assertEqual(len(decomposition.terms), 2)
        for term in decomposition.terms:
            self.assertAlmostEqual(term.weight, 0.5, delta=1e-9)
            self.assertAlmostEqual(abs(term.state_a.amplitudes[0]), abs(term.state_b.amplitudes[0]), delta=1e-9)
            self.assertAlmostEqual(abs(term.state_a.amplitudes[0]) * abs(term.state_a.amplitudes[1]), 0.0, delta=1e-9)

    def test_product_states(self):
        """Test product states reconstruct with B states that are eigenvectors of rho_B"""
        for _ in range(10):
            rho = ProductStateFactory()
            decomposition = self.build(rho)
            self.assertReconstructs(decomposition, rho)
            rho_b = partial_trace(rho, 1).matrix
            for term in decomposition.terms:
                b = term.state_b.amplitudes
                mean = np.vdot(b, rho_b @ b)
                self.assertLess(np.linalg.norm(rho_b @ b - mean * b), 1e-7)

    def test_rotated_classical_states(self):
        """Test classically correlated states in random bases reconstruct"""
        for seed in range(10):
            rho = rotated_classical_state(100 + 3 * seed, 0.3 + 0.04 * seed)
            self.assertReconstructs(self.build(rho), rho)

    def test_null_branch(self):
        """Test |0><0| (x) rho_B uses the surviving branch only"""
        rho_b = random_density(8, 2)
        rho = DensityMatrix(np.kron(np.diag([1.0, 0.0]), rho_b), (2, 2))
        decomposition = self.build(rho)
        self.assertReconstructs(decomposition, rho)
        for term in decomposition.terms:
            self.assertAlmostEqual(abs(term.state_a.amplitudes[0]), 1.0, delta=1e-9)

    def test_bell_state_not_applicable(self):
        """Test the construction refuses a state without a weak-locality basis"""
        verdict = weak_locality_search(BELL, grid=test_config.get_grid('fast'))
        with self.assertRaises(NotApplicable):
            build_separable_decomposition(BELL, verdict)

    def test_qutrit_a_unsupported(self):
        """Test a qutrit A is rejected"""
        verdict = WeakLocalityVerdict(True, 0.0, 0.0, 0.0, 2, 1e-8, basis_at(0.0, 0.0))
        with self.assertRaises(UnsupportedDimension):
            build_separable_decomposition(ProductStateFactory(dim_a=3), verdict)

    def test_weights_must_sum_to_one(self):
        """Test a decomposition with missing weight is rejected"""
        term = SeparableTerm(0.5, PureState([1, 0]), PureState([1, 0]))
        with self.assertRaises(ValidationFailed):
            SeparableDecomposition((term,), (2, 2))


class DecompositionSerializerTest(SimpleTestCase):
    """Ensemble documents and reports"""

    def test_document_parses(self):
        """Test an ensemble document becomes weighted vectors"""
        serializer = DecompositionDocumentSerializer(data={'vectors': [[[0.6, 0], [0, 0]], [[0, 0], [0, 0.8]]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        vectors = serializer.to_vectors()
        self.assertAlmostEqual(vectors[0].weight, 0.36)
        self.assertAlmostEqual(vectors[1].weight, 0.64)

    def test_ragged_document(self):
        """Test vectors of different lengths are rejected"""
        serializer = DecompositionDocumentSerializer(data={'vectors': [[[1, 0]], [[0, 0], [1, 0]]]})
        self.assertFalse(serializer.is_valid())
        self.assertIn('vectors', serializer.errors)

    def test_overlong_vector(self):
        """Test a vector with norm above one is a validation error"""
        serializer = DecompositionDocumentSerializer(data={'vectors': [[[1, 0], [1, 0]]]})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        with self.assertRaises(serializers.ValidationError):
            serializer.to_vectors()

    def test_decomposition_report(self):
        """Test terms are reported as weights and column kets"""
        decomposition = build_separable_decomposition(
            CLASSICAL, weak_locality_search(CLASSICAL, grid=test_config.get_grid('fast'))
        )
        data = DecompositionSerializer(decomposition).data
        self.assertEqual(data['dims'], [2, 2])
        self.assertEqual(len(data['terms'][0]['state_a']), 2)
        self.assertEqual(len(data['terms'][0]['state_a'][0]), 1)

    def test_connection_report(self):
        """Test the connection report carries U0, U and the eigenvalues"""
        u, lam = unitary_diagonalize(SIGMA_X)
        data = connection_report(SIGMA_X, u, lam)
        self.assertEqual(data['u0'][0][1], [1.0, 0.0])
        self.assertEqual(len(data['eigenvalues']), 2)
        self.assertAlmostEqual(data['eigenvalues'][1][0], -1.0)
