"""
Measurements on subsystem A and the conditional states they leave on B.
"""
import logging
from dataclasses import dataclass
from math import prod

import numpy as np

from matcore.arrays import as_array, dagger, frobenius, frozen, projector
from matcore.conf import resolve
from matcore.exceptions import DimensionMismatch
from matcore.linalg import partial_trace, partial_trace_matrix, tensor, von_neumann_entropy
from matcore.states import DensityMatrix

from .exceptions import IncompleteMeasurement

logger = logging.getLogger(__name__)

COMPLETENESS_TOL = 1e-9
# Conditional states are renormalized by small probabilities, so their
# construction-time checks are looser than the global ones.
CONDITIONAL_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class MeasurementSet:
    operators: tuple

    def __post_init__(self):
        operators = tuple(frozen(op) for op in self.operators)
        if not operators:
            raise IncompleteMeasurement("A measurement needs at least one operator")
        shape = operators[0].shape
        if any(op.shape != shape or shape[0] != shape[1] for op in operators):
            raise DimensionMismatch("Measurement operators must be square and share one shape")
        total = sum(dagger(op) @ op for op in operators)
        if frobenius(total - np.eye(shape[0])) > COMPLETENESS_TOL:
            raise IncompleteMeasurement("Measurement operators do not satisfy sum M_i^dag M_i = I")
        object.__setattr__(self, 'operators', operators)

    @classmethod
    def projective(cls, basis):
        """Rank-1 projectors onto the given orthonormal vectors."""
        return cls(tuple(projector(getattr(v, 'amplitudes', v)) for v in basis))

    @property
    def dim(self):
        return self.operators[0].shape[0]

    def __len__(self):
        return len(self.operators)


@dataclass(frozen=True, eq=False)
class ConditionalOutcome:
    index: int
    prob: float
    post_state_b: DensityMatrix
    null_outcome: bool = False


def _require_bipartite(rho_ab):
    if not rho_ab.is_bipartite:
        raise DimensionMismatch(f"Expected a bipartite state, got dims {rho_ab.dims}")


def conditional_states(rho_ab, m, null_prob=None):
    """
    Outcome probabilities and normalized B states for measurement ``m`` on A.

    Outcomes with probability below ``null_prob`` get rho_B as their
    conditional state and are flagged with ``null_outcome``.
    """
    _require_bipartite(rho_ab)
    null_prob = resolve(null_prob, 'NULL_OUTCOME_PROB')
    d_a, d_b = rho_ab.dims
    if m.dim != d_a:
        raise DimensionMismatch(f"Measurement acts on dimension {m.dim}, subsystem A has {d_a}")

    rho_b = None
    outcomes = []
    identity_b = np.eye(d_b)
    for index, operator in enumerate(m.operators):
        kraus = tensor(operator, identity_b)
        branch = kraus @ rho_ab.matrix @ dagger(kraus)
        prob = float(np.trace(branch).real)
        if prob < null_prob:
            if rho_b is None:
                rho_b = partial_trace(rho_ab, 1)
            logger.warning("Outcome %d has probability %.3g; using rho_B as its conditional state", index, prob)
            outcomes.append(ConditionalOutcome(index, max(prob, 0.0), rho_b, null_outcome=True))
            continue
        reduced = partial_trace_matrix(branch, rho_ab.dims, 1)
        reduced = (reduced + dagger(reduced)) / 2
        post = DensityMatrix(reduced / np.trace(reduced).real, (d_b,), tol=CONDITIONAL_TOL)
        outcomes.append(ConditionalOutcome(index, prob, post))
    return outcomes


def is_product(rho_ab, tol=None):
    """Strong locality: rho_AB equals rho_A (x) rho_B within ``tol`` (Frobenius)."""
    _require_bipartite(rho_ab)
    tol = resolve(tol, 'PRODUCT_TOL')
    rho_a = partial_trace(rho_ab, 0)
    rho_b = partial_trace(rho_ab, 1)
    return frobenius(rho_ab.matrix - tensor(rho_a, rho_b)) < tol


def schmidt_coefficients(psi_ab, dims=None):
    dims = tuple(dims or psi_ab.dims)
    if len(dims) != 2 or prod(dims) != psi_ab.dim:
        raise DimensionMismatch(f"Dims {dims} do not factor a state of dimension {psi_ab.dim}")
    coefficients = psi_ab.amplitudes.reshape(dims)
    return np.linalg.svd(coefficients, compute_uv=False)


def pure_is_entangled(psi_ab, dims=None, tol=None):
    """Entangled iff the Schmidt rank (singular values above ``tol``) is at least 2."""
    tol = resolve(tol, 'SCHMIDT_TOL')
    rank = int(np.sum(schmidt_coefficients(psi_ab, dims) > tol))
    return rank >= 2


def info_gain(rho_b, rho_ib):
    """S(rho_B) - S(rho_iB) in bits; negative values are reported as they are."""
    if as_array(rho_b).shape != as_array(rho_ib).shape:
        raise DimensionMismatch("States for information gain must share a dimension")
    return von_neumann_entropy(rho_b) - von_neumann_entropy(rho_ib)


def outcome_residual(outcomes, rho_b):
    """Largest Frobenius distance between a conditional state and rho_B."""
    return max(
        (0.0 if outcome.null_outcome else frobenius(outcome.post_state_b.matrix - rho_b.matrix))
        for outcome in outcomes
    )
