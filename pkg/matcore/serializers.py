"""
Interchange format shared by every app.

A document is JSON with ``dims`` (subsystem dimensions) and ``matrix``
(nested rows of ``[re, im]`` pairs). A one-column matrix is a pure state,
a square one a density matrix.
"""
import io
import math
from math import prod

import numpy as np
from rest_framework import serializers
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from .exceptions import ToolkitError
from .states import DensityMatrix, PureState


class ComplexEntryField(serializers.Field):
    default_error_messages = {
        'invalid': 'Expected a [re, im] pair of numbers.',
        'non_finite': 'Entries must be finite numbers.',
    }

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            self.fail('invalid')
        if any(isinstance(part, bool) or not isinstance(part, (int, float)) for part in data):
            self.fail('invalid')
        if not all(math.isfinite(part) for part in data):
            self.fail('non_finite')
        return complex(data[0], data[1])

    def to_representation(self, value):
        value = complex(value)
        return [float(value.real), float(value.imag)]


class ComplexMatrixField(serializers.Field):
    default_error_messages = {
        'invalid': 'Expected a non-empty list of rows.',
        'ragged': 'All rows must have the same length ({expected}); row {row} has {found}.',
    }
    entry_field = ComplexEntryField()

    def to_internal_value(self, data):
        if not isinstance(data, list) or not data or not all(isinstance(row, list) and row for row in data):
            self.fail('invalid')
        width = len(data[0])
        for index, row in enumerate(data):
            if len(row) != width:
                self.fail('ragged', expected=width, row=index, found=len(row))
        return np.array(
            [[self.entry_field.to_internal_value(entry) for entry in row] for row in data],
            dtype=np.complex128,
        )

    def to_representation(self, value):
        matrix = np.atleast_2d(np.asarray(value, dtype=np.complex128))
        return [[self.entry_field.to_representation(entry) for entry in row] for row in matrix]


class StateDocumentSerializer(serializers.Serializer):
    dims = serializers.ListField(child=serializers.IntegerField(min_value=1), allow_empty=False, required=False)
    matrix = ComplexMatrixField()

    def validate(self, attrs):
        matrix = attrs['matrix']
        rows, cols = matrix.shape
        if cols not in (1, rows):
            raise serializers.ValidationError({'matrix': 'State matrix must be square or a single column.'})
        dims = tuple(attrs.get('dims') or (rows,))
        if prod(dims) != rows:
            raise serializers.ValidationError({'dims': f'Dimensions {list(dims)} do not multiply to {rows}.'})
        attrs['dims'] = dims
        return attrs

    def to_state(self, tol=None):
        """Build the validated PureState/DensityMatrix (call after ``is_valid``)."""
        matrix = self.validated_data['matrix']
        dims = self.validated_data['dims']
        try:
            if matrix.shape[1] == 1 and matrix.shape[0] > 1:
                return PureState(matrix[:, 0], dims, tol=tol)
            return DensityMatrix(matrix, dims, tol=tol)
        except ToolkitError as exc:
            raise serializers.ValidationError({'matrix': str(exc)}) from exc


class OperatorDocumentSerializer(serializers.Serializer):
    dims = serializers.ListField(child=serializers.IntegerField(min_value=1), required=False)
    matrix = ComplexMatrixField()


def parse_document(text):
    """Parse JSON text (str or bytes) into Python data."""
    if isinstance(text, str):
        text = text.encode('utf-8')
    return JSONParser().parse(io.BytesIO(text))


def render_document(data):
    return JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8')


def state_from_data(data, tol=None):
    serializer = StateDocumentSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    return serializer.to_state(tol=tol)


def state_document(state):
    """Interchange document for a PureState or DensityMatrix."""
    if isinstance(state, PureState):
        matrix = state.amplitudes.reshape(-1, 1)
    else:
        matrix = state.matrix
    return OperatorDocumentSerializer({'dims': list(state.dims), 'matrix': matrix}).data


def operator_document(matrix, dims=None):
    matrix = np.asarray(matrix)
    return OperatorDocumentSerializer({'dims': list(dims or (matrix.shape[0],)), 'matrix': matrix}).data
