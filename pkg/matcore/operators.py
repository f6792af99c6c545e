"""Standard qubit operators. Basis convention: sigma_z|0> = +|0>."""
import numpy as np

IDENTITY_2 = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

for _operator in (IDENTITY_2, SIGMA_X, SIGMA_Y, SIGMA_Z):
    _operator.setflags(write=False)


def spin_along(n):
    """n . sigma for a real 3-vector n."""
    nx, ny, nz = (float(c) for c in n)
    return nx * SIGMA_X + ny * SIGMA_Y + nz * SIGMA_Z


def bloch_ket(theta, phi):
    """cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>."""
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)], dtype=np.complex128)


def bloch_ket_perp(theta, phi):
    """The state orthogonal to ``bloch_ket(theta, phi)``."""
    return np.array([np.sin(theta / 2), -np.exp(1j * phi) * np.cos(theta / 2)], dtype=np.complex128)
