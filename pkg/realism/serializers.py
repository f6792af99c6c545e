from rest_framework import serializers

from matcore.serializers import ComplexEntryField, operator_document

from .witness import compare_orderings


class WitnessReportSerializer(serializers.Serializer):
    verdict = serializers.CharField()
    source = serializers.CharField()
    dims = serializers.ListField(child=serializers.IntegerField())
    a = serializers.DictField()
    b = serializers.DictField()
    c = serializers.DictField()
    predicted_gap = ComplexEntryField()
    qm_ab = ComplexEntryField()
    qm_ba = ComplexEntryField()
    hvm_ab_minus_ba = serializers.FloatField()


class MaximallyMixedReportSerializer(serializers.Serializer):
    verdict = serializers.CharField()
    dims = serializers.ListField(child=serializers.IntegerField())
    deltas = serializers.ListField(child=serializers.FloatField())


def witness_report(witness, rho):
    """
    Report data for a witness evaluated on ``rho`` (a DensityMatrix).

    A, B and C are interchange documents, so they can be fed back to
    ``sample --a/--b``.
    """
    qm_ab, qm_ba = compare_orderings(rho, witness.a, witness.b)
    return WitnessReportSerializer({
        'verdict': 'non-realism',
        'source': witness.source,
        'dims': list(witness.dims),
        'a': operator_document(witness.a.matrix, witness.dims),
        'b': operator_document(witness.b.matrix, witness.dims),
        'c': operator_document(witness.c, witness.dims),
        'predicted_gap': witness.predicted_gap,
        'qm_ab': qm_ab,
        'qm_ba': qm_ba,
        'hvm_ab_minus_ba': 0.0,
    }).data


def maximally_mixed_report(error, dims):
    return MaximallyMixedReportSerializer({
        'verdict': 'maximally-mixed',
        'dims': list(dims),
        'deltas': list(error.deltas),
    }).data
