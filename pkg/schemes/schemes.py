"""
The two experimental proposals: a mixed single qubit measured with sigma_x
and sigma_y, and the two-qubit state cos(a)|00> + sin(a)|11> measured with
sigma_x (x) sigma_x and (n.sigma) (x) (n.sigma).

The commutator gap Tr(rho C) is purely imaginary; every report also carries
the Hermitian witness D = -iC so that the gap can be measured as i<D>.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from matcore.conf import resolve
from matcore.exceptions import ValidationFailed
from matcore.linalg import commutator, expectation, tensor
from matcore.operators import SIGMA_X, SIGMA_Y, spin_along
from matcore.states import DensityMatrix, HermitianObservable, PureState

logger = logging.getLogger(__name__)

UNIT_NORM_TOL = 1e-10
DIAGONAL_N = (1 / np.sqrt(2), 1 / np.sqrt(2), 0.0)
SINGLE_QUBIT = 'single-qubit'
TWO_QUBIT = 'two-qubit'


@dataclass(frozen=True)
class SingleQubitScheme:
    p: float

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValidationFailed(f"Mixture weight p must lie in [0, 1], got {self.p}")

    def state(self):
        return DensityMatrix.diagonal([self.p, 1.0 - self.p])

    def observables(self):
        return HermitianObservable(SIGMA_X), HermitianObservable(SIGMA_Y)


@dataclass(frozen=True)
class TwoQubitScheme:
    alpha: float
    n: tuple = DIAGONAL_N

    def __post_init__(self):
        n = tuple(float(c) for c in self.n)
        if len(n) != 3:
            raise ValidationFailed(f"n must be a 3-vector, got {len(n)} components")
        if abs(np.linalg.norm(n) - 1.0) > UNIT_NORM_TOL:
            raise ValidationFailed(f"n must be a unit vector, norm is {np.linalg.norm(n):.12g}")
        object.__setattr__(self, 'n', n)

    def pure_state(self):
        amplitudes = np.zeros(4, dtype=np.complex128)
        amplitudes[0] = np.cos(self.alpha)
        amplitudes[3] = np.sin(self.alpha)
        return PureState(amplitudes, (2, 2))

    def state(self):
        return self.pure_state().density()

    def observables(self):
        spin = spin_along(self.n)
        return HermitianObservable(tensor(SIGMA_X, SIGMA_X)), HermitianObservable(tensor(spin, spin))


@dataclass(frozen=True, eq=False)
class SchemeReport:
    a: HermitianObservable
    b: HermitianObservable
    c: np.ndarray
    gap: complex
    hermitian_witness_d: HermitianObservable
    d_expectation: float


def _report(rho, a, b):
    c = commutator(a, b)
    d = HermitianObservable(-1j * c)
    d_value = expectation(rho, d)
    return SchemeReport(
        a=a,
        b=b,
        c=c,
        gap=expectation(rho, c),
        hermitian_witness_d=d,
        d_expectation=float(d_value.real),
    )


def run_single_qubit(scheme):
    """gap = 2i(2p - 1) with D = 2 sigma_z."""
    return _report(scheme.state(), *scheme.observables())


def run_two_qubit(scheme):
    """Numerical gap; for n = (1, 1, 0)/sqrt 2 it equals 2i cos 2 alpha."""
    return _report(scheme.state(), *scheme.observables())


def run_scheme(scheme):
    if isinstance(scheme, SingleQubitScheme):
        return run_single_qubit(scheme)
    return run_two_qubit(scheme)


def predicted_two_qubit_gap(alpha):
    """Closed form of the two-qubit gap along n = (1, 1, 0)/sqrt 2."""
    return 2j * np.cos(2 * alpha)


def build_scheme(family, value, n=None):
    if family == SINGLE_QUBIT:
        return SingleQubitScheme(float(value))
    if family == TWO_QUBIT:
        return TwoQubitScheme(float(value), DIAGONAL_N if n is None else tuple(n))
    raise ValidationFailed(f"Unknown scheme family '{family}'")


@dataclass(frozen=True)
class SweepRow:
    param: float
    gap_imag: float
    d_expectation: float


def sweep(family, start, stop, steps, n=None, jobs=None):
    """
    Rows at ``steps`` evenly spaced parameter values from ``start`` to
    ``stop`` inclusive, in ascending parameter order.
    """
    jobs = resolve(jobs, 'JOBS')
    if steps < 2:
        raise ValidationFailed(f"A sweep needs at least 2 steps, got {steps}")
    if start == stop:
        raise ValidationFailed("A sweep needs a non-empty parameter range")
    low, high = sorted((float(start), float(stop)))
    values = np.linspace(low, high, steps)
    # Validate every point before any work is scheduled.
    schemes = [build_scheme(family, value, n) for value in values]

    def row(scheme, value):
        report = run_scheme(scheme)
        return SweepRow(float(value), float(report.gap.imag), report.d_expectation)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            rows = list(executor.map(row, schemes, values))
    else:
        rows = [row(scheme, value) for scheme, value in zip(schemes, values)]
    logger.info("Swept %s over [%g, %g] in %d steps", family, low, high, steps)
    return rows
