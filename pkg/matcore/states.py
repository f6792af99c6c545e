"""
Typed carriers for states and observables.

Every value validates its invariants on construction and is immutable
afterwards; the ``tol`` argument loosens the checks for deliberately
perturbed inputs.
"""
from dataclasses import dataclass, field
from math import prod

import numpy as np

from .arrays import frozen, is_hermitian, is_square
from .conf import resolve
from .exceptions import DimensionMismatch, NotHermitian, ValidationFailed


def _dims_for(size, dims):
    dims = (size,) if dims is None else tuple(int(d) for d in dims)
    if any(d < 1 for d in dims):
        raise ValidationFailed(f"Subsystem dimensions must be positive, got {dims}")
    if prod(dims) != size:
        raise DimensionMismatch(f"Subsystem dims {dims} do not multiply to {size}")
    return dims


@dataclass(frozen=True, eq=False)
class PureState:
    amplitudes: np.ndarray
    dims: tuple = None
    tol: float = field(default=None, repr=False)

    def __post_init__(self):
        tol = resolve(self.tol, 'VALIDATION_TOL')
        amplitudes = frozen(np.ravel(self.amplitudes))
        norm = np.linalg.norm(amplitudes)
        if abs(norm - 1.0) > tol:
            raise ValidationFailed(f"Pure state must be normalized, norm is {norm:.12g}")
        object.__setattr__(self, 'amplitudes', amplitudes)
        object.__setattr__(self, 'dims', _dims_for(amplitudes.size, self.dims))

    @classmethod
    def normalized(cls, amplitudes, dims=None):
        amplitudes = np.asarray(amplitudes, dtype=np.complex128).ravel()
        return cls(amplitudes / np.linalg.norm(amplitudes), dims)

    @property
    def dim(self):
        return self.amplitudes.size

    def density(self):
        return DensityMatrix(np.outer(self.amplitudes, np.conj(self.amplitudes)), self.dims)

    def isclose(self, other, atol):
        """Equality up to ``atol`` entrywise (global phase is significant)."""
        return self.dims == other.dims and bool(np.all(np.abs(self.amplitudes - other.amplitudes) <= atol))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    matrix: np.ndarray
    dims: tuple = None
    tol: float = field(default=None, repr=False)

    def __post_init__(self):
        tol = resolve(self.tol, 'VALIDATION_TOL')
        matrix = frozen(self.matrix)
        if not is_square(matrix):
            raise DimensionMismatch(f"Density matrix must be square, got shape {matrix.shape}")
        if not is_hermitian(matrix, tol):
            raise NotHermitian("Density matrix is not Hermitian")
        trace = np.trace(matrix).real
        if abs(trace - 1.0) > tol:
            raise ValidationFailed(f"Density matrix trace is {trace:.12g}, expected 1")
        smallest = np.linalg.eigvalsh(matrix)[0]
        if smallest < -tol:
            raise ValidationFailed(f"Density matrix has negative eigenvalue {smallest:.3g}")
        object.__setattr__(self, 'matrix', matrix)
        object.__setattr__(self, 'dims', _dims_for(matrix.shape[0], self.dims))

    @classmethod
    def maximally_mixed(cls, dim):
        return cls(np.eye(dim) / dim)

    @classmethod
    def diagonal(cls, probabilities, dims=None):
        return cls(np.diag(np.asarray(probabilities, dtype=np.complex128)), dims)

    @property
    def dim(self):
        return self.matrix.shape[0]

    @property
    def is_bipartite(self):
        return len(self.dims) == 2

    def isclose(self, other, atol):
        return self.dims == other.dims and bool(np.all(np.abs(self.matrix - other.matrix) <= atol))


@dataclass(frozen=True, eq=False)
class HermitianObservable:
    matrix: np.ndarray
    tol: float = field(default=None, repr=False)

    def __post_init__(self):
        tol = resolve(self.tol, 'VALIDATION_TOL')
        matrix = frozen(self.matrix)
        if not is_hermitian(matrix, tol):
            raise NotHermitian("Observable is not Hermitian")
        object.__setattr__(self, 'matrix', matrix)

    @property
    def dim(self):
        return self.matrix.shape[0]
