"""
Test configuration and settings
"""

# Grid resolutions: coarse grids keep the search tests fast; the default
# (48) is exercised once by the command tests.
TEST_GRIDS = {
    'fast': 12,
    'property': 24,
}

# Sample sizes per suite
TEST_DATA_LIMITS = {
    'random_states': 50,
    'random_witness_states': 100,
    'hermitian_pairs': 1000,
    'random_measurements': 100,
    'random_sampling_pairs': 20,
    'random_decomposition_pairs': 50,
}

TEST_SHOTS = {
    'convergence': 100000,
    'precise': 1000000,
}

# Acceptance tolerances
TEST_TOLERANCES = {
    'exact': 1e-12,
    'matrix': 1e-10,
    'gap': 1e-9,
    'unitary': 1e-9,
    'hjw_map': 1e-8,
    'reconstruction': 1e-7,
    'sigma_bound': 4.0,
    'convergence_bound': 5.0,
}


# Coverage settings
TEST_COVERAGE = {
    'minimum_coverage': 85,
}


class TestConfiguration:
    """Central configuration class for tests"""

    __test__ = False

    def __init__(self):
        self.grids = TEST_GRIDS
        self.data_limits = TEST_DATA_LIMITS
        self.shots = TEST_SHOTS
        self.tolerances = TEST_TOLERANCES
        self.coverage = TEST_COVERAGE

    def get_grid(self, kind):
        return self.grids.get(kind, self.grids['fast'])

    def get_data_limit(self, kind):
        return self.data_limits.get(kind, 20)

    def get_shots(self, kind):
        return self.shots.get(kind, self.shots['convergence'])

    def get_tolerance(self, kind):
        return self.tolerances[kind]


# Global test configuration instance
test_config = TestConfiguration()
