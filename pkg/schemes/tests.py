"""
Core tests for the schemes app
"""
from tests.test_schemes import SingleQubitSchemeTest, TwoQubitSchemeTest

# Re-export for Django test discovery
__all__ = [
    'SingleQubitSchemeTest',
    'TwoQubitSchemeTest',
]
