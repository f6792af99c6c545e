"""
One-call locality classification of a bipartite state.
"""
import logging
from dataclasses import dataclass

from matcore.linalg import partial_trace
from matcore.states import PureState

from .decomposition import build_separable_decomposition
from .exceptions import UnsupportedDimension
from .measurement import conditional_states, info_gain, is_product, pure_is_entangled
from .search import strong_locality_violation, weak_locality_search

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Classification:
    dims: tuple
    strong_local: bool
    pure_entangled: bool = None
    weak_verdict: object = None
    separable_decomposition: object = None
    info_gain_bits: tuple = ()


def classify_state(state, measurement=None, tol=None, grid=None, jobs=None, weak_search=True):
    """
    Strong/weak locality verdicts for ``state`` (PureState or DensityMatrix).

    ``info_gain_bits`` is reported per outcome of ``measurement``; without one
    the most disturbing rank-1 measurement on A is used.
    """
    pure_entangled = None
    if isinstance(state, PureState):
        pure_entangled = pure_is_entangled(state)
        rho_ab = state.density()
    else:
        rho_ab = state
    if not rho_ab.is_bipartite:
        raise UnsupportedDimension(f"Classification needs a bipartite state, got dims {rho_ab.dims}")
    if weak_search and rho_ab.dims[0] != 2:
        raise UnsupportedDimension(f"Weak-locality search needs a two-dimensional A subsystem, got dims {rho_ab.dims}")

    strong_local = is_product(rho_ab)
    verdict = decomposition = None
    if weak_search:
        verdict = weak_locality_search(rho_ab, tol=tol, grid=grid, jobs=jobs)
        if verdict.found:
            decomposition = build_separable_decomposition(rho_ab, verdict)

    if measurement is None:
        measurement = strong_locality_violation(rho_ab, grid=grid, jobs=jobs)
    rho_b = partial_trace(rho_ab, 1)
    gains = tuple(info_gain(rho_b, outcome.post_state_b) for outcome in conditional_states(rho_ab, measurement))

    logger.info("Classified state with dims %s: strong_local=%s", rho_ab.dims, strong_local)
    return Classification(
        dims=tuple(rho_ab.dims),
        strong_local=strong_local,
        pure_entangled=pure_entangled,
        weak_verdict=verdict,
        separable_decomposition=decomposition,
        info_gain_bits=gains,
    )
