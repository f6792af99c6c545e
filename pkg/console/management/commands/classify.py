import numpy as np

from console.base import ToolkitCommand
from locality.classification import classify_state
from locality.measurement import MeasurementSet
from locality.serializers import classification_report
from matcore.exceptions import DimensionMismatch
from matcore.serializers import OperatorDocumentSerializer


class Command(ToolkitCommand):
    help = 'Classify a bipartite state against strong and weak locality.'
    tolerance_setting = 'SEARCH_TOL'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--basis',
            help='Operator document whose columns are an orthonormal basis on A, used for info_gain_bits',
        )
        parser.add_argument('--skip-weak', action='store_true', help='Do not run the weak-locality search')

    def load_basis(self, path):
        serializer = OperatorDocumentSerializer(data=self.read_document(path))
        serializer.is_valid(raise_exception=True)
        columns = np.asarray(serializer.validated_data['matrix'])
        return MeasurementSet.projective(columns.T)

    def run(self, config, options):
        state = self.load_state(config)
        if len(state.dims) != 2:
            raise DimensionMismatch(f"classify needs a bipartite state, got dims {list(state.dims)}")
        measurement = self.load_basis(options['basis']) if options.get('basis') else None
        classification = classify_state(
            state,
            measurement=measurement,
            tol=config.tolerance,
            grid=config.grid,
            jobs=config.jobs,
            weak_search=not options.get('skip_weak'),
        )
        self.emit(classification_report(classification))
