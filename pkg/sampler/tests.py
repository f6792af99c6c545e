"""
Core tests for the sampler app
"""
from tests.test_sampler import MeasureProjectiveTest

# Re-export for Django test discovery
__all__ = [
    'MeasureProjectiveTest',
]
