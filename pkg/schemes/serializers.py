import csv
from dataclasses import asdict

from rest_framework import serializers

from matcore.serializers import ComplexEntryField, operator_document, state_document

SWEEP_HEADER = ['param', 'gap_imag', 'd_expectation']


class SchemeReportSerializer(serializers.Serializer):
    scheme = serializers.CharField()
    parameters = serializers.DictField(child=serializers.JSONField())
    state = serializers.DictField()
    a = serializers.DictField()
    b = serializers.DictField()
    c = serializers.DictField()
    gap = ComplexEntryField(source='report.gap')
    hermitian_witness_d = serializers.DictField()
    d_expectation = serializers.FloatField(source='report.d_expectation')
    gap_route = serializers.CharField()


def scheme_report(family, scheme, report):
    """Scheme run with its state and operators as interchange documents."""
    state = scheme.state()
    return SchemeReportSerializer({
        'scheme': family,
        'parameters': asdict(scheme),
        'state': state_document(state),
        'a': operator_document(report.a.matrix, state.dims),
        'b': operator_document(report.b.matrix, state.dims),
        'c': operator_document(report.c, state.dims),
        'hermitian_witness_d': operator_document(report.hermitian_witness_d.matrix, state.dims),
        'report': report,
        'gap_route': 'i<D> with D = -i[A, B]',
    }).data


def write_sweep_csv(rows, stream):
    """CSV with header ``param,gap_imag,d_expectation``, one line per row."""
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        writer.writerow([repr(row.param), repr(row.gap_imag), repr(row.d_expectation)])


class SweepRowSerializer(serializers.Serializer):
    param = serializers.FloatField()
    gap_imag = serializers.FloatField()
    d_expectation = serializers.FloatField()


def sweep_rows_document(rows):
    return SweepRowSerializer(rows, many=True).data
