from dataclasses import replace

import numpy as np

from console.base import ToolkitCommand, float_list
from matcore.exceptions import ValidationFailed
from matcore.serializers import OperatorDocumentSerializer
from matcore.states import HermitianObservable, PureState
from sampler.estimators import estimate_gap, measure_projective, sequential_expectation
from sampler.serializers import estimator_report
from schemes.schemes import DIAGONAL_N, SINGLE_QUBIT, TWO_QUBIT, build_scheme, predicted_two_qubit_gap, run_scheme
from .scheme import scheme_parameter


class Command(ToolkitCommand):
    help = (
        'Sample the Hermitian witness D = -i[A, B] of a scheme, or an observable / '
        'a sequential pair on a state document.'
    )

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--scheme', choices=(SINGLE_QUBIT, TWO_QUBIT), help='Sample a built-in scheme')
        parser.add_argument('--p', type=float, help='Weight of |0><0| (single-qubit)')
        parser.add_argument('--alpha', type=float, help='State angle in radians (two-qubit)')
        parser.add_argument('--n', type=float_list, help='Unit measurement axis nx,ny,nz (two-qubit)')
        parser.add_argument('--observable', help='Operator document: sample this observable on --state')
        parser.add_argument('--a', dest='observable_a', help='Operator document for A (with --b)')
        parser.add_argument('--b', dest='observable_b', help='Operator document for B (with --a)')
        parser.add_argument(
            '--sequential', action='store_true',
            help='Measure A then B on the updated state instead of sampling D',
        )

    def load_observable(self, path):
        serializer = OperatorDocumentSerializer(data=self.read_document(path))
        serializer.is_valid(raise_exception=True)
        return HermitianObservable(np.asarray(serializer.validated_data['matrix']))

    def run(self, config, options):
        sampling = {'shots': config.shots, 'seed': config.seed, 'jobs': config.jobs}
        if options.get('scheme'):
            self.emit(self.sample_scheme(options, sampling))
            return

        state = self.load_state(config)
        rho = state.density() if isinstance(state, PureState) else state
        if options.get('observable'):
            report = measure_projective(rho, self.load_observable(options['observable']), **sampling)
            self.emit(estimator_report(report))
            return
        if not (options.get('observable_a') and options.get('observable_b')):
            raise ValidationFailed('sample needs --scheme, --observable, or both --a and --b')
        a = self.load_observable(options['observable_a'])
        b = self.load_observable(options['observable_b'])
        if options.get('sequential'):
            self.emit(estimator_report(sequential_expectation(rho, a, b, **sampling)))
            return
        _, report = estimate_gap(rho, a, b, **sampling)
        self.emit(estimator_report(report, gap=True))

    def sample_scheme(self, options, sampling):
        family = options['scheme']
        scheme = build_scheme(family, scheme_parameter(family, options), options.get('n'))
        a, b = scheme.observables()
        _, report = estimate_gap(scheme.state(), a, b, **sampling)
        if family == TWO_QUBIT and np.allclose(scheme.n, DIAGONAL_N):
            exact = float(predicted_two_qubit_gap(scheme.alpha).imag)
        else:
            exact = run_scheme(scheme).d_expectation
        return estimator_report(replace(report, exact=exact), gap=True)
