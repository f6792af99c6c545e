from console.base import ToolkitCommand
from locality.decomposition import hjw_connect, unitary_diagonalize
from locality.serializers import DecompositionDocumentSerializer, connection_report


class Command(ToolkitCommand):
    help = 'Connect two ensemble decompositions of the same density matrix by a unitary and diagonalize it.'
    tolerance_setting = 'HJW_TOL'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('first', help='Decomposition document {"vectors": [...]}')
        parser.add_argument('second', help='Decomposition document {"vectors": [...]}')

    def load_decomposition(self, path):
        serializer = DecompositionDocumentSerializer(data=self.read_document(path))
        serializer.is_valid(raise_exception=True)
        return serializer.to_vectors()

    def run(self, config, options):
        first = self.load_decomposition(options['first'])
        second = self.load_decomposition(options['second'])
        u0 = hjw_connect(first, second, tol=config.tolerance)
        u, lam = unitary_diagonalize(u0)
        self.emit(connection_report(u0, u, lam))
