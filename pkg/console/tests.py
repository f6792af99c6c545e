"""
Core tests for the console app
"""
from tests.test_commands import FlagErrorTest, SchemeCommandTest, WitnessCommandTest

# Re-export for Django test discovery
__all__ = [
    'FlagErrorTest',
    'SchemeCommandTest',
    'WitnessCommandTest',
]
