"""
Shared plumbing for the toolkit's management commands.

Every command parses the common flags into a ``RunConfig``, runs, and
writes one document (JSON) or table (CSV) to stdout. Failures leave through
``CommandError`` with the exit code carried in ``returncode``:
0 success, 1 input error, 2 maximally-mixed verdict, 3 unsupported dimension.
"""
import argparse
import logging
import sys
from dataclasses import dataclass
from functools import partial
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError
from rest_framework.exceptions import ParseError, ValidationError

from locality.exceptions import UnsupportedDimension
from matcore.conf import toolkit_setting
from matcore.exceptions import ToolkitError, ValidationFailed
from matcore.serializers import parse_document, render_document, state_from_data
from schemes.serializers import sweep_rows_document, write_sweep_csv

logger = logging.getLogger(__name__)

EXIT_INPUT_ERROR = 1
EXIT_MAXIMALLY_MIXED = 2
EXIT_UNSUPPORTED_DIMENSION = 3
OUTPUT_FORMATS = ('json', 'csv')


@dataclass(frozen=True)
class RunConfig:
    command: str
    state_path: str = None
    dims: tuple = None
    tolerance: float = None
    grid: int = None
    shots: int = None
    seed: int = None
    output_format: str = 'json'
    jobs: int = None

    def __post_init__(self):
        if self.tolerance is not None and self.tolerance <= 0:
            raise ValidationFailed(f"--tol must be positive, got {self.tolerance}")
        if self.grid is not None and self.grid < 2:
            raise ValidationFailed(f"--grid must be at least 2, got {self.grid}")
        if self.shots is not None and self.shots < 1:
            raise ValidationFailed(f"--shots must be at least 1, got {self.shots}")
        if self.jobs is not None and self.jobs < 1:
            raise ValidationFailed(f"--jobs must be at least 1, got {self.jobs}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValidationFailed(f"--format must be one of {', '.join(OUTPUT_FORMATS)}")


def int_list(value):
    """argparse type for ``2,2``."""
    try:
        items = tuple(int(part) for part in value.split(','))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{value}'") from exc
    if not items or any(item < 1 for item in items):
        raise argparse.ArgumentTypeError(f"dimensions must be positive, got '{value}'")
    return items


def float_list(value):
    """argparse type for ``0.7071,0.7071,0``."""
    try:
        return tuple(float(part) for part in value.split(','))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{value}'") from exc


def flag_error(parser, message):
    """
    Malformed flags exit with the input-error code.

    argparse would exit with 2, which the toolkit reserves for the
    maximally-mixed verdict.
    """
    if not parser.called_from_command_line:
        raise CommandError(f"Error: {message}", returncode=EXIT_INPUT_ERROR)
    parser.print_usage(sys.stderr)
    parser.exit(EXIT_INPUT_ERROR, f"{parser.prog}: error: {message}\n")


class ToolkitCommand(BaseCommand):
    """Base for the toolkit commands; subclasses implement ``run(config, options)``."""

    tolerance_setting = 'VALIDATION_TOL'
    default_format = 'json'

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser.error = partial(flag_error, parser)
        return parser

    def add_arguments(self, parser):
        parser.add_argument('--state', dest='state_path', help='State document (interchange JSON)')
        parser.add_argument('--dims', type=int_list, help='Subsystem dimensions, e.g. 2,2 (overrides the document)')
        parser.add_argument(
            '--tol', type=float, dest='tolerance', default=toolkit_setting(self.tolerance_setting),
            help=f'Decision tolerance (default {toolkit_setting(self.tolerance_setting)})',
        )
        parser.add_argument(
            '--grid', type=int, default=toolkit_setting('SEARCH_GRID'),
            help=f"Bloch grid resolution per angle (default {toolkit_setting('SEARCH_GRID')})",
        )
        parser.add_argument(
            '--shots', type=int, default=toolkit_setting('SHOTS'),
            help=f"Shots per estimate (default {toolkit_setting('SHOTS')})",
        )
        parser.add_argument(
            '--seed', type=int, default=toolkit_setting('SEED'),
            help=f"Sampler seed (default {toolkit_setting('SEED')})",
        )
        parser.add_argument(
            '--format', dest='output_format', choices=OUTPUT_FORMATS,
            help=f'Output format (default {self.default_format})',
        )
        parser.add_argument(
            '--jobs', type=int, default=toolkit_setting('JOBS'),
            help=f"Worker threads for grids, sweeps and sampling (default {toolkit_setting('JOBS')})",
        )

    def run_config(self, options):
        return RunConfig(
            command=self.command_name(),
            state_path=options.get('state_path'),
            dims=options.get('dims'),
            tolerance=options.get('tolerance'),
            grid=options.get('grid'),
            shots=options.get('shots'),
            seed=options.get('seed'),
            output_format=options.get('output_format') or self.default_format,
            jobs=options.get('jobs'),
        )

    def command_name(self):
        return self.__module__.rsplit('.', 1)[-1]

    def handle(self, *args, **options):
        try:
            config = self.run_config(options)
            logger.debug("Running %s with %s", config.command, config)
            self.run(config, options)
        except CommandError:
            raise
        except (ValidationError, ParseError) as exc:
            raise CommandError(f"Malformed input: {exc.detail}", returncode=EXIT_INPUT_ERROR) from exc
        except UnsupportedDimension as exc:
            raise CommandError(str(exc), returncode=EXIT_UNSUPPORTED_DIMENSION) from exc
        except ToolkitError as exc:
            raise CommandError(str(exc), returncode=EXIT_INPUT_ERROR) from exc
        except OSError as exc:
            raise CommandError(f"Cannot read input: {exc}", returncode=EXIT_INPUT_ERROR) from exc

    def run(self, config, options):
        raise NotImplementedError('subclasses of ToolkitCommand must provide a run() method')

    def read_document(self, path):
        return parse_document(Path(path).read_bytes())

    def load_state(self, config):
        if not config.state_path:
            raise CommandError('--state is required', returncode=EXIT_INPUT_ERROR)
        data = self.read_document(config.state_path)
        if config.dims is not None and isinstance(data, dict):
            data = {**data, 'dims': list(config.dims)}
        return state_from_data(data)

    def emit(self, data):
        self.stdout.write(render_document(data))

    def emit_sweep(self, rows, output_format):
        if output_format == 'json':
            self.emit(sweep_rows_document(rows))
        else:
            write_sweep_csv(rows, self.stdout)
