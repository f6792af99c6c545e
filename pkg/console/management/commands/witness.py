from django.core.management.base import CommandError

from console.base import EXIT_MAXIMALLY_MIXED, ToolkitCommand
from matcore.states import PureState
from realism.exceptions import MaximallyMixedError
from realism.serializers import maximally_mixed_report, witness_report
from realism.witness import witness_for


class Command(ToolkitCommand):
    help = 'Build a realism witness (A, B, C = [A, B]) for a state and report the commutator gap.'
    tolerance_setting = 'WITNESS_TOL'

    def run(self, config, options):
        state = self.load_state(config)
        rho = state.density() if isinstance(state, PureState) else state
        try:
            witness = witness_for(state, tol=config.tolerance)
        except MaximallyMixedError as exc:
            self.emit(maximally_mixed_report(exc, state.dims))
            raise CommandError('Maximally mixed state: no witness exists', returncode=EXIT_MAXIMALLY_MIXED) from exc
        self.emit(witness_report(witness, rho))
