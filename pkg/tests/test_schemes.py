"""
Tests for the single-qubit and two-qubit experimental schemes and sweeps.
"""
from io import StringIO

import numpy as np
from django.test import SimpleTestCase
from parameterized import parameterized

from matcore.exceptions import ValidationFailed
from matcore.linalg import commutator, tensor
from matcore.operators import IDENTITY_2, SIGMA_Z
from matcore.serializers import OperatorDocumentSerializer, parse_document, render_document, state_from_data
from realism.witness import realism_gap
from schemes.schemes import (
    SINGLE_QUBIT,
    TWO_QUBIT,
    SingleQubitScheme,
    TwoQubitScheme,
    build_scheme,
    predicted_two_qubit_gap,
    run_scheme,
    run_single_qubit,
    run_two_qubit,
    sweep,
)
from schemes.serializers import SWEEP_HEADER, scheme_report, sweep_rows_document, write_sweep_csv

from .test_config import test_config
from .utils import MatrixAssertionsMixin


class SingleQubitSchemeTest(MatrixAssertionsMixin, SimpleTestCase):
    """diag(p, 1 - p) measured with sigma_x and sigma_y"""

    @parameterized.expand([
        ('maximally_mixed', 0.5, 0.0),
        ('pure', 1.0, 2.0),
        ('biased', 0.8, 1.2),
        ('reversed', 0.2, -1.2),
    ])
    def test_gap(self, name, p, gap_imag):
        """Test the gap is 2i(2p - 1)"""
        report = run_single_qubit(SingleQubitScheme(p))
        self.assertComplexAlmostEqual(report.gap, 1j * gap_imag, test_config.get_tolerance('gap'))
        self.assertAlmostEqual(report.d_expectation, gap_imag, delta=1e-12)

    def test_witness_is_two_sigma_z(self):
        """Test D = -i[sigma_x, sigma_y] = 2 sigma_z"""
        report = run_single_qubit(SingleQubitScheme(0.8))
        self.assertMatrixAlmostEqual(report.hermitian_witness_d, 2 * SIGMA_Z)
        self.assertHermitian(report.hermitian_witness_d)

    @parameterized.expand([(-0.1,), (1.5,)])
    def test_invalid_weight(self, p):
        """Test p outside [0, 1] is rejected"""
        with self.assertRaises(ValidationFailed):
            SingleQubitScheme(p)


class TwoQubitSchemeTest(MatrixAssertionsMixin, SimpleTestCase):
    """cos(a)|00> + sin(a)|11> with sigma_x (x) sigma_x and (n.sigma) (x) (n.sigma)"""

    @parameterized.expand([
        ('product', 0.0, 2.0),
        ('maximally_entangled', np.pi / 4, 0.0),
        ('sixth', np.pi / 6, 1.0),
    ])
    def test_gap(self, name, alpha, gap_imag):
        """Test the gap along the diagonal n is 2i cos 2a"""
        report = run_two_qubit(TwoQubitScheme(alpha))
        self.assertComplexAlmostEqual(report.gap, 1j * gap_imag, test_config.get_tolerance('gap'))
        self.assertComplexAlmostEqual(report.gap, predicted_two_qubit_gap(alpha), test_config.get_tolerance('gap'))
        self.assertAlmostEqual(report.d_expectation, gap_imag, delta=1e-9)

    def test_commutator_closed_form(self):
        """Test C = i(I (x) sigma_z + sigma_z (x) I) for the diagonal n"""
        report = run_two_qubit(TwoQubitScheme(0.3))
        expected = 1j * (tensor(IDENTITY_2, SIGMA_Z) + tensor(SIGMA_Z, IDENTITY_2))
        self.assertMatrixAlmostEqual(report.c, expected, 1e-12)

    def test_random_directions_match_realism_gap(self):
        """Test scheme gaps agree with the generic gap for random alpha and n"""
        rng = np.random.default_rng(31)
        for _ in range(test_config.get_data_limit('random_states')):
            n = rng.normal(size=3)
            scheme = TwoQubitScheme(rng.uniform(0, np.pi), n / np.linalg.norm(n))
            a, b = scheme.observables()
            report = run_two_qubit(scheme)
            self.assertComplexAlmostEqual(report.gap, realism_gap(scheme.state(), a, b), 1e-12)
            self.assertAlmostEqual(report.gap.real, 0.0, delta=1e-12)
            self.assertComplexAlmostEqual(realism_gap(scheme.state(), b, a), -report.gap, 1e-12)
            self.assertMatrixAlmostEqual(report.c, commutator(a, b))

    def test_gap_over_quarter_turn(self):
        """Test the diagonal-n gap is 2i cos 2a at 25 angles in [0, pi/2]"""
        for alpha in np.linspace(0, np.pi / 2, 25):
            report = run_two_qubit(TwoQubitScheme(alpha))
            self.assertComplexAlmostEqual(report.gap, predicted_two_qubit_gap(alpha), 1e-9)
            self.assertComplexAlmostEqual(report.gap, 2j * np.cos(2 * alpha), 1e-9)

    def test_gap_is_odd_about_quarter_turn(self):
        """Test the diagonal-n gap changes sign between a and pi/2 - a"""
        for alpha in np.linspace(0, np.pi / 4, 7):
            first = run_two_qubit(TwoQubitScheme(alpha)).gap
            second = run_two_qubit(TwoQubitScheme(np.pi / 2 - alpha)).gap
            self.assertComplexAlmostEqual(first, -second, 1e-12)

    @parameterized.expand([
        ('not_unit', (1.0, 1.0, 0.0)),
        ('too_short', (1.0, 0.0)),
    ])
    def test_invalid_direction(self, name, n):
        """Test n must be a unit 3-vector"""
        with self.assertRaises(ValidationFailed):
            TwoQubitScheme(0.1, n)

    def test_build_scheme(self):
        """Test families dispatch to the right scheme"""
        self.assertIsInstance(build_scheme(SINGLE_QUBIT, 0.3), SingleQubitScheme)
        self.assertEqual(build_scheme(TWO_QUBIT, 0.3, (0, 0, 1)).n, (0.0, 0.0, 1.0))
        self.assertIsInstance(run_scheme(build_scheme(TWO_QUBIT, 0.3)).gap, complex)
        with self.assertRaises(ValidationFailed):
            build_scheme('three-qubit', 0.3)


class SweepTest(SimpleTestCase):
    """Parameter sweeps and their CSV/JSON forms"""

    def test_two_qubit_sweep(self):
        """Test a quarter-turn sweep runs from +2 to -2"""
        rows = sweep(TWO_QUBIT, 0.0, np.pi / 2, 3)
        self.assertEqual([row.param for row in rows], [0.0, np.pi / 4, np.pi / 2])
        np.testing.assert_allclose([row.gap_imag for row in rows], [2.0, 0.0, -2.0], atol=1e-12)

    def test_reversed_bounds(self):
        """Test rows are ascending whichever bound comes first"""
        self.assertEqual(sweep(SINGLE_QUBIT, 1.0, 0.0, 5), sweep(SINGLE_QUBIT, 0.0, 1.0, 5))

    def test_threaded_sweep(self):
        """Test a threaded sweep gives the serial rows"""
        self.assertEqual(sweep(TWO_QUBIT, 0.0, 1.5, 9, jobs=1), sweep(TWO_QUBIT, 0.0, 1.5, 9, jobs=4))

    @parameterized.expand([
        ('one_step', 0.0, 1.0, 1),
        ('empty_range', 0.5, 0.5, 4),
        ('invalid_point', 0.5, 1.5, 3),
    ])
    def test_invalid_sweep(self, name, start, stop, steps):
        """Test degenerate ranges and out-of-range points are rejected"""
        with self.assertRaises(ValidationFailed):
            sweep(SINGLE_QUBIT, start, stop, steps)

    def test_csv(self):
        """Test the CSV has a header and one line per row"""
        stream = StringIO()
        write_sweep_csv(sweep(SINGLE_QUBIT, 0.0, 1.0, 3), stream)
        lines = stream.getvalue().splitlines()
        self.assertEqual(lines[0], ','.join(SWEEP_HEADER))
        self.assertEqual(len(lines), 4)
        self.assertEqual([float(v) for v in lines[-1].split(',')], [1.0, 2.0, 2.0])

    def test_json_rows(self):
        """Test sweep rows serialize to objects"""
        data = sweep_rows_document(sweep(SINGLE_QUBIT, 0.0, 1.0, 2))
        self.assertEqual(data[0]['param'], 0.0)
        self.assertAlmostEqual(data[0]['gap_imag'], -2.0)


class SchemeReportTest(MatrixAssertionsMixin, SimpleTestCase):
    """JSON report of a single scheme run"""

    def test_single_qubit_report(self):
        """Test the report carries parameters, operators and the gap"""
        scheme = SingleQubitScheme(0.8)
        data = scheme_report(SINGLE_QUBIT, scheme, run_scheme(scheme))
        self.assertEqual(data['scheme'], SINGLE_QUBIT)
        self.assertEqual(data['parameters'], {'p': 0.8})
        self.assertAlmostEqual(data['gap'][1], 1.2)
        self.assertAlmostEqual(data['d_expectation'], 1.2)
        self.assertEqual(len(data['hermitian_witness_d']['matrix']), 2)
        self.assertEqual(data['a']['dims'], [2])
        self.assertIn('gap_route', data)

    def test_state_document_reads_back(self):
        """Test the emitted scheme state parses back to the scheme's density matrix"""
        scheme = TwoQubitScheme(np.pi / 6)
        data = scheme_report(TWO_QUBIT, scheme, run_scheme(scheme))
        state = state_from_data(parse_document(render_document(data['state'])))
        self.assertEqual(state.dims, (2, 2))
        self.assertMatrixAlmostEqual(state.matrix, scheme.state().matrix, 1e-12)
        a = OperatorDocumentSerializer(data=data['a'])
        self.assertTrue(a.is_valid(), a.errors)
        self.assertMatrixAlmostEqual(np.asarray(a.validated_data['matrix']), run_scheme(scheme).a.matrix, 1e-12)
