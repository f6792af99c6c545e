"""
Core tests for the locality app
Import only essential, stable tests
"""
from tests.test_decomposition import HjwConnectTest, SeparableDecompositionTest
from tests.test_locality import ConditionalStatesTest, StrongLocalityTest

# Re-export for Django test discovery
__all__ = [
    'ConditionalStatesTest',
    'HjwConnectTest',
    'SeparableDecompositionTest',
    'StrongLocalityTest',
]
