"""
Dense complex linear algebra used by every other app.

Operations are pure functions over numpy arrays or the typed carriers in
``matcore.states``; typed arguments are unwrapped with ``as_array``.
"""
import numpy as np
from scipy.stats import entropy

from .arrays import as_array, fix_phase, is_hermitian, require_same_shape
from .conf import resolve
from .exceptions import DimensionMismatch, NotHermitian, ValidationFailed
from .states import DensityMatrix


def tensor(a, b):
    """Kronecker product; block (i, j) of the result is a[i, j] * b."""
    return np.kron(as_array(a), as_array(b))


def partial_trace_matrix(matrix, dims, keep):
    """Partial trace of an arbitrary (possibly unnormalized) bipartite operator."""
    matrix = as_array(matrix)
    if len(dims) != 2:
        raise DimensionMismatch(f"Partial trace needs exactly 2 subsystems, got dims {tuple(dims)}")
    if keep not in (0, 1):
        raise DimensionMismatch(f"Subsystem index must be 0 or 1, got {keep}")
    d_a, d_b = dims
    blocks = matrix.reshape(d_a, d_b, d_a, d_b)
    if keep == 1:
        return np.einsum('ijik->jk', blocks)
    return np.einsum('ijkj->ik', blocks)


def partial_trace(rho, keep):
    """Reduced state on subsystem ``keep`` (0 = A, 1 = B)."""
    reduced = partial_trace_matrix(rho.matrix, rho.dims, keep)
    return DensityMatrix(reduced, (rho.dims[keep],))


def commutator(a, b):
    """AB - BA; anti-Hermitian whenever a and b are Hermitian."""
    a = as_array(a)
    b = as_array(b)
    require_same_shape(a, b, 'observables')
    return a @ b - b @ a


def eig_hermitian(h, tol=None):
    """
    Eigendecomposition of a Hermitian matrix.

    Eigenvalues ascend; each eigenvector column has its first nonzero
    component made real positive so repeated runs agree exactly.
    """
    matrix = as_array(h)
    if not is_hermitian(matrix, resolve(tol, 'VALIDATION_TOL')):
        raise NotHermitian("eig_hermitian needs a Hermitian matrix")
    values, vectors = np.linalg.eigh((matrix + matrix.conj().T) / 2)
    vectors = np.column_stack([fix_phase(vectors[:, k]) for k in range(vectors.shape[1])])
    return values, vectors


def expectation(rho, m):
    """Tr(rho m) as a complex number."""
    rho = as_array(rho)
    m = as_array(m)
    require_same_shape(rho, m, 'state and operator')
    return complex(np.trace(rho @ m))


def von_neumann_entropy(rho, tol=None):
    """Entropy in bits; eigenvalues in [-tol, 0) count as zero."""
    tol = resolve(tol, 'VALIDATION_TOL')
    values = np.linalg.eigvalsh(as_array(rho))
    if values[0] < -tol:
        raise ValidationFailed(f"State has eigenvalue {values[0]:.3g} below the entropy tolerance")
    return float(entropy(np.clip(values, 0.0, None), base=2))


def spectral_projectors(h, merge_tol=None):
    """
    Spectral decomposition with degenerate eigenvalues merged.

    Returns ``(values, projectors)`` with values ascending; eigenvalues closer
    than ``merge_tol`` to their neighbour share one projector.
    """
    merge_tol = resolve(merge_tol, 'EIGEN_MERGE_TOL')
    values, vectors = eig_hermitian(h)
    groups = [[0]]
    for index in range(1, values.size):
        if values[index] - values[groups[-1][-1]] <= merge_tol:
            groups[-1].append(index)
        else:
            groups.append([index])
    merged_values = np.array([values[group].mean() for group in groups])
    projectors = [vectors[:, group] @ vectors[:, group].conj().T for group in groups]
    return merged_values, projectors
