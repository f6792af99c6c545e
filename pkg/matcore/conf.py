"""
Toolkit settings access.

Project overrides live in ``settings.REALISM_TOOLKIT``; anything missing
falls back to the packaged defaults below, the same way DRF resolves
``api_settings``.
"""
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    'VALIDATION_TOL': 1e-10,
    'WITNESS_TOL': 1e-9,
    'SCHMIDT_TOL': 1e-8,
    'PRODUCT_TOL': 1e-9,
    'SEARCH_TOL': 1e-8,
    'SEARCH_GRID': 48,
    'REFINE_ITERATIONS': 40,
    'TIE_TOL': 1e-12,
    'NULL_OUTCOME_PROB': 1e-12,
    'EIGEN_MERGE_TOL': 1e-9,
    'HJW_TOL': 1e-8,
    'SHOTS': 100000,
    'SEED': 0,
    'JOBS': 1,
}


def toolkit_setting(name):
    """Return a toolkit setting, preferring the project's override."""
    if name not in DEFAULTS:
        raise KeyError(f"Unknown toolkit setting '{name}'")
    try:
        overrides = getattr(settings, 'REALISM_TOOLKIT', {})
    except ImproperlyConfigured:
        overrides = {}
    return overrides.get(name, DEFAULTS[name])


def resolve(value, name):
    """Use ``value`` unless it is None, else the configured default."""
    return toolkit_setting(name) if value is None else value
