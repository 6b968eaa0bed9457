import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


def pytest_configure(config):
    # DEGENLAB_SEED pins hypothesis' example generation
    seed = os.environ.get("DEGENLAB_SEED")
    if seed is not None and getattr(config.option, "hypothesis_seed", None) is None:
        config.option.hypothesis_seed = int(seed)
