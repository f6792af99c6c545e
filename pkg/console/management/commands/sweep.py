from console.base import ToolkitCommand, float_list
from schemes.schemes import SINGLE_QUBIT, TWO_QUBIT, sweep


class Command(ToolkitCommand):
    help = 'Sweep a scheme parameter over an inclusive grid and write param,gap_imag,d_expectation rows.'
    default_format = 'csv'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('family', choices=(SINGLE_QUBIT, TWO_QUBIT))
        parser.add_argument('--start', type=float, required=True)
        parser.add_argument('--stop', type=float, required=True)
        parser.add_argument('--steps', type=int, required=True)
        parser.add_argument('--n', type=float_list, help='Unit measurement axis nx,ny,nz (two-qubit)')

    def run(self, config, options):
        rows = sweep(options['family'], options['start'], options['stop'], options['steps'], n=options.get('n'), jobs=config.jobs)
        self.emit_sweep(rows, config.output_format)
