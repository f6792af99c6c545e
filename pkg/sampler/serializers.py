from rest_framework import serializers


class EstimatorReportSerializer(serializers.Serializer):
    mean = serializers.FloatField()
    std_error = serializers.FloatField()
    shots = serializers.IntegerField()
    seed = serializers.IntegerField()
    exact = serializers.FloatField(allow_null=True)


class GapEstimateSerializer(EstimatorReportSerializer):
    """An estimator report for D = -i[A, B] together with the gap estimate i * mean."""
    gap_estimate = serializers.SerializerMethodField()

    def get_gap_estimate(self, report):
        return [0.0, float(report.mean)]


def estimator_report(report, gap=False):
    serializer_class = GapEstimateSerializer if gap else EstimatorReportSerializer
    return serializer_class(report).data
