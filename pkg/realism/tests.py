"""
Core tests for the realism app
Import only essential, stable tests
"""
from tests.test_realism import MixedWitnessTest, PureWitnessTest, RealismGapTest

# Re-export for Django test discovery
__all__ = [
    'MixedWitnessTest',
    'PureWitnessTest',
    'RealismGapTest',
]
