import os


class QuasialgConfig:
    """Handles search seeds, sweep limits and fixture locations."""

    def __init__(self, seed=0, jobs=1, sample_count=32, max_group_order=256,
                 exhaustive_quadruple_limit=16, random_quadruples=4096,
                 fixtures_path="fixtures", golden_path="fixtures/golden"):
        # Resolve paths relative to project root
        base_dir = os.path.dirname(os.path.abspath(__file__))  # quasi_core folder
        project_root = os.path.dirname(base_dir)

        self.seed = seed
        self.jobs = max(1, int(jobs))
        self.sample_count = sample_count
        self.max_group_order = max_group_order
        self.exhaustive_quadruple_limit = exhaustive_quadruple_limit
        self.random_quadruples = random_quadruples
        self.fixtures_path = os.path.join(project_root, fixtures_path)
        self.golden_path = os.path.join(project_root, golden_path)

    def get_config(self):
        """Return config details as a dictionary."""
        return {
            "seed": self.seed,
            "jobs": self.jobs,
            "sample_count": self.sample_count,
            "max_group_order": self.max_group_order,
            "exhaustive_quadruple_limit": self.exhaustive_quadruple_limit,
            "random_quadruples": self.random_quadruples,
            "fixtures_path": self.fixtures_path,
            "golden_path": self.golden_path,
        }


DEFAULT_CONFIG = QuasialgConfig()
