"""
Core tests for the matcore app
Import only essential, stable tests
"""
from tests.test_matcore import CommutatorTest, PartialTraceTest, StateValidationTest
from tests.test_serializers import StateDocumentSerializerTest

# Re-export for Django test discovery
__all__ = [
    'CommutatorTest',
    'PartialTraceTest',
    'StateValidationTest',
    'StateDocumentSerializerTest',
]
