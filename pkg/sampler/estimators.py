"""
Seeded shot-level simulation of projective measurements.

Every call draws from ``numpy.random.Generator(PCG64)``. With one job the
whole run is a single stream seeded by ``seed``; with more, each worker gets
a child of ``SeedSequence(seed)`` and outcomes are concatenated in worker
order, so a given (seed, jobs) pair always reproduces the same report.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numpy.random import PCG64, Generator, SeedSequence

from matcore.arrays import as_array
from matcore.conf import resolve
from matcore.exceptions import DimensionMismatch, ValidationFailed
from matcore.linalg import commutator, expectation, spectral_projectors
from matcore.states import HermitianObservable

logger = logging.getLogger(__name__)

CONDITIONAL_CLIP = 1e-12


@dataclass(frozen=True)
class EstimatorReport:
    mean: float
    std_error: float
    shots: int
    seed: int
    exact: float = None


def _check_dims(rho, *observables):
    dim = as_array(rho).shape[0]
    for observable in observables:
        if as_array(observable).shape != (dim, dim):
            raise DimensionMismatch(f"Observable of shape {as_array(observable).shape} does not act on dimension {dim}")


def _generators(seed, jobs):
    if jobs == 1:
        return [Generator(PCG64(seed))]
    return [Generator(PCG64(child)) for child in SeedSequence(seed).spawn(jobs)]


def _shard_sizes(shots, jobs):
    base, extra = divmod(shots, jobs)
    return [base + (1 if index < extra else 0) for index in range(jobs)]


def _run_sharded(draw, shots, seed, jobs):
    """Run ``draw(rng, count)`` on every shard and concatenate in worker order."""
    if shots < 1:
        raise ValidationFailed(f"shots must be at least 1, got {shots}")
    jobs = max(1, min(jobs, shots))
    generators = _generators(seed, jobs)
    sizes = _shard_sizes(shots, jobs)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            parts = list(executor.map(draw, generators, sizes))
    else:
        parts = [draw(generators[0], sizes[0])]
    return np.concatenate(parts)


def summarize(outcomes, seed, exact=None):
    shots = outcomes.size
    std_error = float(np.std(outcomes, ddof=1) / np.sqrt(shots)) if shots > 1 else 0.0
    return EstimatorReport(
        mean=float(np.mean(outcomes)),
        std_error=std_error,
        shots=int(shots),
        seed=int(seed),
        exact=exact,
    )


def outcome_distribution(rho, h):
    """Merged eigenvalues of ``h`` and their Born probabilities in ``rho``."""
    values, projectors = spectral_projectors(h)
    probabilities = np.array([expectation(rho, projector).real for projector in projectors])
    probabilities = np.clip(probabilities, 0.0, None)
    return values, projectors, probabilities / probabilities.sum()


def measure_projective(rho, h, shots=None, seed=None, jobs=None):
    """Sample eigenvalues of ``h`` shot by shot; the mean converges to Tr(rho h)."""
    shots = resolve(shots, 'SHOTS')
    seed = resolve(seed, 'SEED')
    jobs = resolve(jobs, 'JOBS')
    _check_dims(rho, h)
    values, _, probabilities = outcome_distribution(rho, h)

    def draw(rng, count):
        return rng.choice(values, size=count, p=probabilities)

    outcomes = _run_sharded(draw, shots, seed, jobs)
    report = summarize(outcomes, seed, exact=expectation(rho, h).real)
    logger.info("Sampled %d shots (seed %d): mean %.6g +/- %.3g", shots, seed, report.mean, report.std_error)
    return report


def hermitian_witness(a, b):
    """D = -i[A, B], the Hermitian observable whose mean times i is the gap."""
    return HermitianObservable(-1j * commutator(a, b))


def estimate_gap(rho, a, b, shots=None, seed=None, jobs=None):
    """Gap estimate i<D> from sampling D; returns ``(estimate, report)``."""
    _check_dims(rho, a, b)
    report = measure_projective(rho, hermitian_witness(a, b), shots=shots, seed=seed, jobs=jobs)
    return 1j * report.mean, report


def exact_sequential_mean(rho, first, second):
    """sum_i a_i Tr(P_i rho P_i B) for the Lueders update after ``first``."""
    _check_dims(rho, first, second)
    rho = as_array(rho)
    values, projectors = spectral_projectors(first)
    second = as_array(second)
    return float(sum(
        value * np.trace(projector @ rho @ projector @ second).real
        for value, projector in zip(values, projectors)
    ))


def sequential_expectation(rho, first, second, shots=None, seed=None, jobs=None):
    """
    Measure ``first``, update the state by the Lueders rule, then measure
    ``second``; each shot records the product of the two eigenvalues.
    """
    shots = resolve(shots, 'SHOTS')
    seed = resolve(seed, 'SEED')
    jobs = resolve(jobs, 'JOBS')
    _check_dims(rho, first, second)
    matrix = as_array(rho)
    first_values, first_projectors, first_probs = outcome_distribution(matrix, first)
    second_values, second_projectors = spectral_projectors(second)

    # conditional[i, j]: probability of second outcome j after first outcome i.
    conditional = np.zeros((first_values.size, second_values.size))
    for i, projector in enumerate(first_projectors):
        if first_probs[i] < CONDITIONAL_CLIP:
            conditional[i, 0] = 1.0
            continue
        updated = projector @ matrix @ projector
        row = np.array([np.trace(q @ updated).real for q in second_projectors])
        row = row / row.sum()
        row[row < CONDITIONAL_CLIP] = 0.0
        conditional[i] = row / row.sum()

    first_cdf = np.cumsum(first_probs)
    first_cdf /= first_cdf[-1]
    second_cdf = np.cumsum(conditional, axis=1)
    second_cdf /= second_cdf[:, -1:]

    def draw(rng, count):
        u_first = rng.random(count)
        u_second = rng.random(count)
        i = np.minimum(np.searchsorted(first_cdf, u_first, side='right'), first_values.size - 1)
        j = np.minimum((u_second[:, None] >= second_cdf[i]).sum(axis=1), second_values.size - 1)
        return first_values[i] * second_values[j]

    outcomes = _run_sharded(draw, shots, seed, jobs)
    report = summarize(outcomes, seed, exact=exact_sequential_mean(matrix, first, second))
    logger.info("Sequential sampling of %d shots (seed %d): mean %.6g", shots, seed, report.mean)
    return report
