"""
Hidden-variable models for a pair of two-valued observables.

The hidden variables are represented only through the joint distribution
p_ij over pre-assigned outcome pairs (A_i, B_j).
"""
from dataclasses import dataclass

import numpy as np

from matcore.arrays import as_array
from matcore.exceptions import ValidationFailed
from matcore.linalg import expectation, spectral_projectors

from .exceptions import NotTwoValued

JOINT_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class HvmJointModel:
    a: tuple
    b: tuple
    p: np.ndarray

    def __post_init__(self):
        p = np.array(self.p, dtype=float, copy=True)
        if p.shape != (2, 2):
            raise ValidationFailed(f"Joint distribution must be 2x2, got {p.shape}")
        if np.any(p < 0) or abs(p.sum() - 1.0) > JOINT_TOL:
            raise ValidationFailed("Joint probabilities must be non-negative and sum to 1")
        if len(self.a) != 2 or len(self.b) != 2:
            raise ValidationFailed("Each observable takes exactly two values")
        p.setflags(write=False)
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'a', tuple(float(v) for v in self.a))
        object.__setattr__(self, 'b', tuple(float(v) for v in self.b))


def hvm_expectation(model):
    """
    (mean of AB, mean of BA) under the model.

    Both sums run over the same terms in the same order, so the pair is
    exactly equal: pre-assigned values commute.
    """
    ab = 0.0
    ba = 0.0
    for i in range(2):
        for j in range(2):
            ab += model.p[i, j] * (model.a[i] * model.b[j])
            ba += model.p[i, j] * (model.b[j] * model.a[i])
    return ab, ba


def _two_valued(h):
    values, projectors = spectral_projectors(h)
    if values.size != 2:
        raise NotTwoValued(f"Observable has {values.size} distinct eigenvalues, expected 2")
    return values, projectors


def hvm_marginal_model(rho, a, b):
    """
    The independent joint model p_ij = p_i q_j whose marginals reproduce the
    quantum single-observable statistics of A and B on rho.
    """
    a_values, a_projectors = _two_valued(a)
    b_values, b_projectors = _two_valued(b)
    p = np.clip([expectation(rho, proj).real for proj in a_projectors], 0.0, None)
    q = np.clip([expectation(rho, proj).real for proj in b_projectors], 0.0, None)
    joint = np.outer(p / p.sum(), q / q.sum())
    return HvmJointModel(tuple(a_values), tuple(b_values), joint)


def single_observable_agreement(rho, a, model):
    """(HVM mean of A, QM mean of A): equal for a model built from rho's marginals."""
    marginal = model.p.sum(axis=1)
    hvm_mean = float(marginal[0] * model.a[0] + marginal[1] * model.a[1])
    return hvm_mean, expectation(rho, as_array(a)).real
