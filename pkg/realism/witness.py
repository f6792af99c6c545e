"""
Witness observables whose commutator separates QM from hidden variables.

For a state and two Hermitian observables A, B any hidden-variable model
predicts <AB> = <BA>; quantum mechanics predicts a difference Tr(rho [A, B]).
The constructions below give a pair with a nonzero difference for every pure
state and for every mixed state except I/n.
"""
import logging
from dataclasses import dataclass

import numpy as np

from matcore.arrays import allclose, as_array, frozen, ket
from matcore.conf import resolve
from matcore.exceptions import ValidationFailed
from matcore.linalg import commutator, eig_hermitian, expectation
from matcore.states import DensityMatrix, HermitianObservable, PureState

from .exceptions import MaximallyMixedError, NonOrthogonalState

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class RealismWitness:
    a: HermitianObservable
    b: HermitianObservable
    c: np.ndarray
    predicted_gap: complex
    source: str = 'pure'
    dims: tuple = None

    def __post_init__(self):
        c = frozen(self.c)
        if not allclose(c, commutator(self.a, self.b), resolve(None, 'VALIDATION_TOL')):
            raise ValidationFailed("Witness C does not equal [A, B]")
        object.__setattr__(self, 'c', c)
        object.__setattr__(self, 'predicted_gap', complex(self.predicted_gap))
        object.__setattr__(self, 'dims', tuple(self.dims or (c.shape[0],)))

    @property
    def hermitian_witness(self):
        """D = -iC, whose ordinary expectation gives the gap as i<D>."""
        return HermitianObservable(-1j * self.c)


def default_orthogonal(psi):
    """
    A state orthogonal to ``psi``: the standard basis vector with the smallest
    overlap (lowest index on ties), Gram-Schmidt against ``psi``.
    """
    overlaps = np.abs(psi.amplitudes)
    index = int(np.argmin(overlaps))
    candidate = ket(index, psi.dim) - psi.amplitudes[index].conjugate() * psi.amplitudes
    return PureState.normalized(candidate, psi.dims)


def _pair_observables(first, second):
    """A = |2><1| + |1><2|, B = -i(|1><2| - |2><1|) for the vectors 1 = first, 2 = second."""
    forward = np.outer(second, np.conj(first))
    backward = np.outer(first, np.conj(second))
    return HermitianObservable(forward + backward), HermitianObservable(-1j * (backward - forward))


def pure_witness(psi, psi_perp=None):
    """
    Witness for a pure state: A, B act on span{psi, psi_perp} and
    <psi|[A, B]|psi> = -2i.
    """
    if psi.dim < 2:
        raise ValidationFailed("A witness needs a state space of dimension at least 2")
    tol = resolve(None, 'VALIDATION_TOL')
    if psi_perp is None:
        psi_perp = default_orthogonal(psi)
    elif psi_perp.dim != psi.dim:
        raise ValidationFailed("psi and psi_perp live in different dimensions")
    elif abs(np.vdot(psi.amplitudes, psi_perp.amplitudes)) > tol:
        raise NonOrthogonalState("psi_perp is not orthogonal to psi")

    a, b = _pair_observables(psi_perp.amplitudes, psi.amplitudes)
    c = commutator(a, b)
    gap = np.vdot(psi.amplitudes, c @ psi.amplitudes)
    return RealismWitness(a, b, c, gap, source='pure', dims=psi.dims)


def eigen_deltas(rho):
    values, vectors = eig_hermitian(rho)
    return values - 1.0 / rho.dim, vectors


def mixed_witness(rho, tol=None):
    """
    Witness for a density matrix built from its two most extreme eigenvalues.

    With Delta p_i = p_i - 1/n, the pair spans the eigenvectors of the largest
    and smallest Delta p; the gap is 2i(Delta p_max - Delta p_min).
    """
    tol = resolve(tol, 'WITNESS_TOL')
    deltas, vectors = eigen_deltas(rho)
    if np.max(np.abs(deltas)) < tol:
        logger.info("Maximally mixed state of dimension %d, no witness exists", rho.dim)
        raise MaximallyMixedError(deltas.tolist())

    first = int(np.argmax(deltas))
    second = int(np.argmin(deltas))
    a, b = _pair_observables(vectors[:, first], vectors[:, second])
    c = commutator(a, b)
    gap = expectation(rho, c)
    logger.debug("Mixed witness on eigen-pair (%d, %d), deltas %.6g / %.6g", first, second, deltas[first], deltas[second])
    return RealismWitness(a, b, c, gap, source='mixed', dims=rho.dims)


def realism_gap(rho, a, b):
    """Tr(rho AB) - Tr(rho BA)."""
    a = as_array(a)
    b = as_array(b)
    return expectation(rho, a @ b) - expectation(rho, b @ a)


def compare_orderings(rho, a, b):
    """The QM averages of the joint operators AB and BA."""
    a = as_array(a)
    b = as_array(b)
    return expectation(rho, a @ b), expectation(rho, b @ a)


def is_maximally_mixed(rho, tol=None):
    """True iff every eigenvalue is within ``tol`` of 1/n (n = full dimension)."""
    tol = resolve(tol, 'WITNESS_TOL')
    deltas, _ = eigen_deltas(rho)
    return bool(np.all(np.abs(deltas) < tol))


def predictable_with_certainty(psi, a, tol=None):
    """
    The certainty criterion: the value of A is predictable without disturbance
    iff psi is an eigenstate of A. Returns ``(flag, value or None)``.
    """
    tol = resolve(tol, 'WITNESS_TOL')
    vector = psi.amplitudes
    image = as_array(a) @ vector
    mean = np.vdot(vector, image).real
    if np.linalg.norm(image - mean * vector) < tol:
        return True, float(mean)
    return False, None


def witness_for(state, tol=None):
    """Dispatch on the state kind: pure states get the pure construction."""
    if isinstance(state, PureState):
        return pure_witness(state)
    if isinstance(state, DensityMatrix):
        return mixed_witness(state, tol=tol)
    raise ValidationFailed(f"Cannot build a witness for {type(state).__name__}")
