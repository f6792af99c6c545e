"""
Array-level helpers shared by the typed wrappers and the operations.

A ComplexMatrix is a plain ``numpy`` complex128 array; these helpers are the
tolerance-aware predicates and small constructors used everywhere else.
"""
import numpy as np

from .exceptions import DimensionMismatch


def as_array(value):
    """Unwrap a typed value (anything with ``.matrix``) into a complex array."""
    matrix = getattr(value, 'matrix', value)
    return np.asarray(matrix, dtype=np.complex128)


def frozen(value):
    """Return a read-only complex copy of ``value``."""
    array = np.array(value, dtype=np.complex128, copy=True)
    array.setflags(write=False)
    return array


def dagger(m):
    return np.conj(np.transpose(m))


def frobenius(m):
    return float(np.linalg.norm(m, 'fro'))


def allclose(a, b, atol):
    """Entrywise equality within an explicit absolute tolerance."""
    a = as_array(a)
    b = as_array(b)
    if a.shape != b.shape:
        return False
    return bool(np.all(np.abs(a - b) <= atol))


def is_square(m):
    return m.ndim == 2 and m.shape[0] == m.shape[1]


def is_hermitian(m, tol):
    m = as_array(m)
    return is_square(m) and bool(np.all(np.abs(m - dagger(m)) <= tol))


def is_unitary(m, tol):
    m = as_array(m)
    if not is_square(m):
        return False
    return bool(np.all(np.abs(dagger(m) @ m - np.eye(m.shape[0])) <= tol))


def require_same_shape(a, b, what='operands'):
    if a.shape != b.shape:
        raise DimensionMismatch(f"Cannot combine {what} of shapes {a.shape} and {b.shape}")


def ket(index, dim):
    vector = np.zeros(dim, dtype=np.complex128)
    vector[index] = 1.0
    return vector


def projector(vector):
    vector = np.asarray(vector, dtype=np.complex128)
    return np.outer(vector, np.conj(vector))


def fix_phase(vector, tol=1e-10):
    """Rotate the global phase so the first nonzero component is real positive."""
    vector = np.asarray(vector, dtype=np.complex128)
    nonzero = np.flatnonzero(np.abs(vector) > tol)
    if nonzero.size == 0:
        return vector
    lead = vector[nonzero[0]]
    return vector * (abs(lead) / lead)


def orthonormal_fill(columns, dim, count=None, tol=1e-8):
    """
    Extend orthonormal ``columns`` by Gram-Schmidt over the standard basis.

    Standard basis vectors are tried in index order and kept when they add a
    new direction, so the completion is deterministic. Returns only the new
    columns (``count`` of them, default: enough to reach ``dim``).
    """
    basis = [np.asarray(c, dtype=np.complex128) for c in np.transpose(columns)] if np.size(columns) else []
    wanted = dim - len(basis) if count is None else count
    added = []
    for index in range(dim):
        if len(added) == wanted:
            break
        candidate = ket(index, dim)
        for vector in basis + added:
            candidate = candidate - np.vdot(vector, candidate) * vector
        norm = np.linalg.norm(candidate)
        if norm > tol:
            added.append(candidate / norm)
    if len(added) != wanted:
        raise DimensionMismatch(f"Could not complete {len(basis)} columns to {len(basis) + wanted} in dimension {dim}")
    return np.array(added, dtype=np.complex128).T.reshape(dim, wanted)


def canonical_subspace_basis(projector_matrix, rank, tol=1e-8):
    """
    Deterministic orthonormal basis of the range of a projector.

    Projects standard basis vectors in index order and orthonormalizes them;
    used wherever a degenerate subspace would otherwise carry solver noise.
    """
    dim = projector_matrix.shape[0]
    found = []
    for index in range(dim):
        if len(found) == rank:
            break
        candidate = projector_matrix[:, index].astype(np.complex128)
        for vector in found:
            candidate = candidate - np.vdot(vector, candidate) * vector
        norm = np.linalg.norm(candidate)
        if norm > tol:
            found.append(candidate / norm)
    if len(found) != rank:
        raise DimensionMismatch(f"Projector range has fewer than {rank} independent directions")
    return np.array(found, dtype=np.complex128).T
