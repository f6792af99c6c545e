import numpy as np
from rest_framework import serializers

from matcore.serializers import ComplexEntryField, ComplexMatrixField

from .decomposition import WeightedVector


class WeakVerdictSerializer(serializers.Serializer):
    found = serializers.BooleanField()
    theta = serializers.FloatField()
    phi = serializers.FloatField()
    residual = serializers.FloatField()
    trace_distance = serializers.FloatField()
    grid = serializers.IntegerField(source='grid_resolution')


class SeparableTermSerializer(serializers.Serializer):
    weight = serializers.FloatField()
    state_a = serializers.SerializerMethodField()
    state_b = serializers.SerializerMethodField()

    def get_state_a(self, term):
        return ComplexMatrixField().to_representation(term.state_a.amplitudes.reshape(-1, 1))

    def get_state_b(self, term):
        return ComplexMatrixField().to_representation(term.state_b.amplitudes.reshape(-1, 1))


class DecompositionSerializer(serializers.Serializer):
    dims = serializers.ListField(child=serializers.IntegerField())
    terms = SeparableTermSerializer(many=True)


class ClassificationReportSerializer(serializers.Serializer):
    dims = serializers.ListField(child=serializers.IntegerField())
    strong_local = serializers.BooleanField()
    pure_entangled = serializers.BooleanField(allow_null=True)
    weak_verdict = WeakVerdictSerializer(allow_null=True)
    separable_decomposition = DecompositionSerializer(allow_null=True)
    info_gain_bits = serializers.ListField(child=serializers.FloatField())


def classification_report(classification):
    data = ClassificationReportSerializer(classification).data
    if data['pure_entangled'] is None:
        del data['pure_entangled']
    return data


class DecompositionDocumentSerializer(serializers.Serializer):
    """``{"vectors": [[[re, im], ...], ...]}``: an ensemble of unnormalized vectors."""
    vectors = serializers.ListField(
        child=serializers.ListField(child=ComplexEntryField(), allow_empty=False),
        allow_empty=False,
    )

    def validate_vectors(self, value):
        if len({len(vector) for vector in value}) != 1:
            raise serializers.ValidationError('All vectors must have the same dimension.')
        return value

    def to_vectors(self):
        try:
            return [WeightedVector(np.array(vector, dtype=np.complex128)) for vector in self.validated_data['vectors']]
        except ValueError as exc:
            raise serializers.ValidationError({'vectors': str(exc)}) from exc


class ConnectionReportSerializer(serializers.Serializer):
    u0 = ComplexMatrixField()
    u = ComplexMatrixField()
    eigenvalues = serializers.ListField(child=ComplexEntryField())


def connection_report(u0, u, lam):
    return ConnectionReportSerializer({'u0': u0, 'u': u, 'eigenvalues': list(lam.diagonal())}).data
