from console.base import ToolkitCommand, float_list
from matcore.exceptions import ValidationFailed
from schemes.schemes import SINGLE_QUBIT, TWO_QUBIT, build_scheme, run_scheme, sweep
from schemes.serializers import scheme_report


def sweep_range(value):
    """``start:stop:steps``."""
    parts = value.split(':')
    if len(parts) != 3:
        raise ValidationFailed(f"--sweep expects start:stop:steps, got '{value}'")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ValidationFailed(f"--sweep expects start:stop:steps, got '{value}'") from exc


def scheme_parameter(family, options):
    name = 'p' if family == SINGLE_QUBIT else 'alpha'
    value = options.get(name)
    if value is None:
        raise ValidationFailed(f"{family} needs --{name}")
    return value


class Command(ToolkitCommand):
    help = 'Run one of the two experimental schemes, or sweep its parameter (CSV).'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('family', choices=(SINGLE_QUBIT, TWO_QUBIT))
        parser.add_argument('--p', type=float, help='Weight of |0><0| (single-qubit)')
        parser.add_argument('--alpha', type=float, help='State angle in radians (two-qubit)')
        parser.add_argument('--n', type=float_list, help='Unit measurement axis nx,ny,nz (two-qubit)')
        parser.add_argument('--sweep', help='start:stop:steps over p or alpha')

    def run(self, config, options):
        family = options['family']
        if options.get('sweep'):
            start, stop, steps = sweep_range(options['sweep'])
            rows = sweep(family, start, stop, steps, n=options.get('n'), jobs=config.jobs)
            self.emit_sweep(rows, options.get('output_format') or 'csv')
            return
        scheme = build_scheme(family, scheme_parameter(family, options), options.get('n'))
        self.emit(scheme_report(family, scheme, run_scheme(scheme)))
